"""Batch command-line front end.

Problems are described by flat key=value config files (``#`` comments,
repeated ``gen=`` / ``mat=`` lines for matrix rows); results are emitted as
JSON or text reports.  Exit codes: 0 success, 1 a checked property failed,
2 bad input, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from .code_latroids import (
    block_matroid,
    chain_support_latroid,
    code_gen_weights_dbar,
    code_gen_weights_dr,
    latroid_from_code,
    latroid_gen_weights,
    latroid_weights_equal_code_weights,
    rect_supp_latroid,
)
from .codes import Code, span
from .core import (
    bases,
    circuits,
    independents,
    rank_from_bases,
    rank_from_circuits,
    rank_from_independents,
    validate_latroid,
)
from .enumerators import (
    enumerator_from_tutte,
    homogeneous_enumerator,
    refined_enumerator,
    tutte_whitney_R,
    tutte_whitney_Rprime,
    weight_distribution,
)
from .errors import CapExceededError
from .isometries import (
    decompose_chain_isometry,
    equivalence_invariance_check,
    is_isometry,
    pir_isometry_projections,
)
from .lattices import is_complemented_lattice, is_modular_lattice
from .limits import VECTOR_ENUM_CAP
from .report import Report
from .rings import Element, Pir, parse_ring
from .selftest import run_all
from .supports import (
    ChainSupport,
    HammingSupport,
    ProductSupport,
    Support,
    TableSupport,
    validate_modular,
    validate_support,
)

SCHEMA_VERSION = 1

COMMANDS = (
    "validate-support",
    "latroid",
    "axioms",
    "crypto-roundtrip",
    "weights",
    "enumerator",
    "tutte",
    "circuits",
    "isometry",
    "selftest",
)


class InputError(ValueError):
    pass


# -- config ---------------------------------------------------------------------


def parse_config(path: str) -> dict:
    """key=value lines; ``gen`` and ``mat`` may repeat and collect rows."""
    out: dict = {"gen": [], "mat": []}
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as e:
        raise InputError(f"cannot read config {path}: {e}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key in ("gen", "mat"):
            out[key].append(value.replace(",", " ").split())
        else:
            out[key] = value
    return out


def parse_entry(ring: Pir, token: str) -> Element:
    """An integer (reduced mod every factor) or colon-joined residues."""
    if ":" in token:
        parts = token.split(":")
        if len(parts) != ring.ell:
            raise InputError(f"entry {token!r} needs {ring.ell} residues")
        return tuple(int(p) % s for p, s in zip(parts, ring.sizes))
    return ring.from_int(int(token))


def parse_support(ring: Pir, n: int, spec: str) -> Support:
    spec = spec.strip()
    if spec == "hamming":
        return HammingSupport(ring, n)
    if spec == "chain":
        return ChainSupport(ring, n)
    if spec.startswith("product[") and spec.endswith("]"):
        names = [p.strip() for p in spec[len("product[") : -1].split(",")]
        if len(names) != n:
            raise InputError(f"product support needs {n} parts, got {len(names)}")
        parts = [parse_support(ring, 1, name) for name in names]
        return ProductSupport(ring, parts)
    if spec.startswith("table:"):
        return _support_from_file(ring, n, spec[len("table:") :])
    raise InputError(f"unknown support spec {spec!r}")


def _support_from_file(ring: Pir, n: int, path: str) -> Support:
    """Lines of the form ``v1 .. vn -> s1 .. su`` covering all of R^n."""
    table = {}
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as e:
        raise InputError(f"cannot read support table {path}: {e}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise InputError(f"{path}:{lineno}: expected 'v -> s'")
        left, _, right = line.partition("->")
        v = tuple(parse_entry(ring, t) for t in left.split())
        if len(v) != n:
            raise InputError(f"{path}:{lineno}: vector needs {n} entries")
        s = tuple(int(t) for t in right.split())
        table[v] = s
    try:
        return TableSupport(ring, n, table)
    except ValueError as e:
        raise InputError(str(e)) from None


def _require(cfg: dict, *keys):
    for key in keys:
        if key not in cfg:
            raise InputError(f"config needs {key}=")


def load_problem(cfg: dict, cap: int):
    _require(cfg, "ring", "n")
    ring = parse_ring(cfg["ring"])
    n = int(cfg["n"])
    gens = [
        tuple(parse_entry(ring, t) for t in row) for row in cfg["gen"]
    ]
    for g in gens:
        if len(g) != n:
            raise InputError(f"generator {g} does not have length {n}")
    code = span(ring, n, gens, cap=cap)
    supp = parse_support(ring, n, cfg.get("support", "chain"))
    return ring, n, code, supp


def build_latroid(cfg: dict, code: Code, supp: Support):
    kind = cfg.get("lattice", "chain-support")
    if kind == "chain-support":
        return chain_support_latroid(code, validate=False)
    if kind == "submodule":
        return latroid_from_code(code, validate=False)
    if kind == "rect":
        return rect_supp_latroid(code, supp, validate=False)
    if kind == "block":
        return block_matroid(code, validate=False)
    raise InputError(f"unknown lattice kind {kind!r}")


# -- serialization ----------------------------------------------------------------


def jsonable(value):
    if isinstance(value, Report):
        return value.to_dict()
    if isinstance(value, Fraction):
        return (
            int(value)
            if value.denominator == 1
            else {"numerator": value.numerator, "denominator": value.denominator}
        )
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(v) for v in value)
    if hasattr(value, "exponents"):
        return list(value.exponents)
    if isinstance(value, Code):
        return sorted(jsonable(v) for v in value.codewords)
    return value


def label_str(label) -> str:
    if isinstance(label, frozenset):
        return "{" + ",".join(map(str, sorted(label))) + "}"
    return str(label)


def render_text(data, indent: str = "") -> str:
    lines = []
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{indent}{key}:")
                lines.append(render_text(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_flat(value)}")
    elif isinstance(data, list):
        for value in data:
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{indent}-")
                lines.append(render_text(value, indent + "  "))
            else:
                lines.append(f"{indent}- {_flat(value)}")
    else:
        lines.append(f"{indent}{_flat(data)}")
    return "\n".join(lines)


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _flat(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(map(str, value)) + "]"
    return str(value)


# -- commands --------------------------------------------------------------------


def cmd_validate_support(cfg, cap):
    _require(cfg, "ring", "n", "support")
    ring = parse_ring(cfg["ring"])
    n = int(cfg["n"])
    try:
        supp = parse_support(ring, n, cfg["support"])
        axioms = validate_support(supp, cap=cap)
    except InputError:
        raise
    except ValueError as e:
        # table supports reject invalid tables at construction
        return {"valid": False, "error": str(e)}, 1
    modular = validate_modular(supp, cap=cap)
    data = {
        "valid": axioms.ok,
        "modular": modular.ok,
        "axioms": axioms.to_dict(),
        "modularity": modular.to_dict(),
    }
    return data, 0 if axioms.ok else 1


def cmd_latroid(cfg, cap):
    ring, n, code, supp = load_problem(cfg, cap)
    lt = build_latroid(cfg, code, supp)
    report = validate_latroid(lt)
    data = {
        "lattice_size": lt.lattice.size,
        "scalar_dim": lt.udim,
        "report": report.to_dict(),
        "elements": [
            {
                "label": label_str(lab),
                "rank": jsonable(lt.rank[i]),
                "length": jsonable(lt.length[i]),
            }
            for i, lab in enumerate(lt.lattice.labels)
        ],
    }
    return data, 0 if report.ok else 1


def cmd_axioms(cfg, cap):
    from .core import axioms_B, axioms_C, axioms_I

    ring, n, code, supp = load_problem(cfg, cap)
    lt = build_latroid(cfg, code, supp)
    lat = lt.lattice
    if not (lat.is_graded and is_complemented_lattice(lat) and is_modular_lattice(lat)):
        raise InputError(
            "axiom systems need a complemented modular graded lattice; "
            "choose lattice=block or a field-case chain-support grid"
        )
    I, B, C = independents(lt), bases(lt), circuits(lt)
    reports = {
        "independents": axioms_I(lat, I),
        "bases": axioms_B(lat, B),
        "circuits": axioms_C(lat, C),
    }
    data = {
        "independents": [label_str(lat.labels[i]) for i in I],
        "bases": [label_str(lat.labels[i]) for i in B],
        "circuits": [label_str(lat.labels[i]) for i in C],
        "reports": {k: r.to_dict() for k, r in reports.items()},
    }
    return data, 0 if all(r.ok for r in reports.values()) else 1


def cmd_crypto_roundtrip(cfg, cap):
    ring, n, code, supp = load_problem(cfg, cap)
    lt = build_latroid(cfg, code, supp)
    lat = lt.lattice
    if not (lat.is_graded and is_complemented_lattice(lat) and is_modular_lattice(lat)):
        raise InputError("round trips need a complemented modular graded lattice")
    if not lt.uses_height_length():
        raise InputError("round trips need the height function as length")
    results = {}
    ok = True
    for tag, rebuilt in (
        ("from_independents", rank_from_independents(lat, independents(lt), validate=False)),
        ("from_bases", rank_from_bases(lat, bases(lt), validate=False)),
        ("from_circuits", rank_from_circuits(lat, circuits(lt), validate=False)),
    ):
        same = rebuilt.rank == lt.rank
        results[tag] = same
        ok = ok and same
    return {"roundtrips": results, "ok": ok}, 0 if ok else 1


def cmd_weights(cfg, cap):
    ring, n, code, supp = load_problem(cfg, cap)
    r = int(cfg["r"]) if "r" in cfg else None
    dbar = code_gen_weights_dbar(code, supp, r)
    dmu = code_gen_weights_dr(code, supp, r)
    data = {"dbar": dbar, "dmu": dmu}
    if isinstance(supp, ChainSupport):
        data["latroid"] = latroid_gen_weights(code)
        rep = latroid_weights_equal_code_weights(code, supp)
        data["latroid_equals_dbar"] = rep.ok
        return data, 0 if rep.ok else 1
    return data, 0


def cmd_enumerator(cfg, cap):
    ring, n, code, supp = load_problem(cfg, cap)
    refined = refined_enumerator(code, supp)
    homog = homogeneous_enumerator(code, supp)
    data = {
        "refined": refined.to_json_dict(),
        "refined_rendered": refined.render(),
        "homogeneous": homog.render(),
        "weight_distribution": weight_distribution(code, supp),
    }
    return data, 0


def cmd_tutte(cfg, cap):
    ring, n, code, supp = load_problem(cfg, cap)
    if ring.ell != 1:
        from .enumerators import pir_tutte_corollary

        rep = pir_tutte_corollary(code)
        direct = refined_enumerator(code, ChainSupport(ring, n))
        data = {
            "refined_rendered": direct.render(),
            "factorization": rep.to_dict(),
        }
        return data, 0 if rep.ok else 1
    lt = chain_support_latroid(code, validate=False)
    rgf = tutte_whitney_R(lt)
    rprime = tutte_whitney_Rprime(lt)
    via_tutte = enumerator_from_tutte(code)
    direct = refined_enumerator(code, ChainSupport(ring, n))
    same = via_tutte == direct
    data = {
        "rank_generating_function": rgf.to_json_dict(),
        "rank_generating_function_rendered": rgf.render(),
        "rprime_rendered": rprime.render(),
        "enumerator_from_tutte": via_tutte.render(),
        "refined_rendered": direct.render(),
        "identity_holds": same,
    }
    return data, 0 if same else 1


def cmd_circuits(cfg, cap):
    ring, n, code, supp = load_problem(cfg, cap)
    lt = build_latroid(cfg, code, supp)
    lat = lt.lattice
    data = {
        "independents": [label_str(lat.labels[i]) for i in independents(lt)],
        "bases": [label_str(lat.labels[i]) for i in bases(lt)],
        "circuits": [label_str(lat.labels[i]) for i in circuits(lt)],
    }
    return data, 0


def cmd_isometry(cfg, cap):
    ring, n, code, supp = load_problem(cfg, cap)
    if not cfg["mat"]:
        raise InputError("isometry command needs mat= rows")
    mat = tuple(
        tuple(parse_entry(ring, t) for t in row) for row in cfg["mat"]
    )
    if len(mat) != n or any(len(row) != n for row in mat):
        raise InputError(f"matrix must be {n}x{n}")
    iso = is_isometry(mat, supp, cap=cap)
    data = {"is_isometry": iso}
    if not iso:
        return data, 1
    if ring.ell == 1:
        D, P = decompose_chain_isometry(mat, supp)
        data["diagonal"] = jsonable(D)
        data["permutation"] = jsonable(P)
    else:
        projs = pir_isometry_projections(mat, supp)
        data["projections"] = [
            {"factor": i, "matrix": jsonable([[x[0] for x in row] for row in m])}
            for i, m in projs
        ]
    if len(code) > 1:
        rep = equivalence_invariance_check(code, mat, supp)
        data["invariance"] = rep.to_dict()
        return data, 0 if rep.ok else 1
    return data, 0


def cmd_selftest(cfg, cap, seed: int = 0):
    rows = []
    ok = True
    for num, title, rep in run_all(seed):
        rows.append(
            {
                "criterion": num,
                "title": title,
                "ok": rep.ok,
                "checks": len(rep.checks),
                "failures": [c.name for c in rep.failures()],
            }
        )
        ok = ok and rep.ok
    return {"criteria": rows, "ok": ok}, 0 if ok else 1


# -- driver -----------------------------------------------------------------------


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="latroids",
        description="Latroids, weight enumerators, and Tutte-Whitney "
        "identities for codes over chain rings and their products.",
    )
    parser.add_argument("--command", required=True, choices=COMMANDS)
    parser.add_argument("--config", help="problem config file (key=value lines)")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--seed", type=int, default=0, help="seed for random corpora")
    parser.add_argument(
        "--cap",
        type=int,
        default=VECTOR_ENUM_CAP,
        help="override the exhaustive-enumeration cap (acknowledges the cost)",
    )
    args = parser.parse_args(argv)

    try:
        if args.command == "selftest":
            cfg = parse_config(args.config) if args.config else {"gen": [], "mat": []}
            data, code = cmd_selftest(cfg, args.cap, seed=args.seed)
        else:
            if not args.config:
                raise InputError(f"{args.command} needs --config")
            cfg = parse_config(args.config)
            handler = {
                "validate-support": cmd_validate_support,
                "latroid": cmd_latroid,
                "axioms": cmd_axioms,
                "crypto-roundtrip": cmd_crypto_roundtrip,
                "weights": cmd_weights,
                "enumerator": cmd_enumerator,
                "tutte": cmd_tutte,
                "circuits": cmd_circuits,
                "isometry": cmd_isometry,
            }[args.command]
            data, code = handler(cfg, args.cap)
    except CapExceededError as e:
        _emit({"error": str(e), "kind": "cap"}, args)
        return 3
    except (InputError, ValueError, KeyError) as e:
        _emit({"error": str(e), "kind": "input"}, args)
        return 2

    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "ok": code == 0,
    }
    payload.update(jsonable(data))
    _emit(payload, args)
    return code


def _emit(payload: dict, args) -> None:
    payload = jsonable(payload)
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = render_text(payload) + "\n"
    if args.out:
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(os.path.abspath(args.out)) or ".")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, args.out)
        except BaseException:
            os.unlink(tmp)
            raise
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
