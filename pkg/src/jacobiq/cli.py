"""Command line front end with exact JSON input and output.

Every subcommand prints a single JSON document to standard output: sorted
keys, no whitespace, so repeated runs are byte identical.  Rationals travel
as strings "p/q" (integers without the "/1"), counts and orders as JSON
numbers, and exact cyclotomic scalars as sorted term lists
{coeff, exp, rad}.  Rank-one vectors collapse to their single entry.

Exit codes: 0 on success, 1 when the library raises a domain error, 2 on
argument or input validation failures.  Errors are themselves JSON objects
{code, message} on standard output, never tracebacks.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .cycles import cycle_generators
from .cyclotomic import CycScalar
from .discgroup import disc_group, is_admissible_index, split_index
from .errors import DomainError, NotInGroup
from .heisenberg import (
    HeisenbergElement,
    gauss_sum,
    orbit_alpha_beta,
    pi_isomorphism,
    pi_matrix,
    rho_M_matrix,
    rho_induced_matrix,
    rho_relations_report,
)
from .jacobi import (
    ComponentVector,
    JacobiFormData,
    RhoMType,
    ThetaDecompType,
    certify_vanishing,
    theta_decompose,
    theta_reconstruct,
    vanishing_bound,
    vv_vanishing_bound,
)
from .lattice import enumerate_coset_points, md, minkowski_reduce, rd
from .rational import (
    RationalMatrix,
    gram_eval,
    is_integral_vector,
    rat,
    snf,
    vadd,
    vec,
)
from .theta import FourierExpansion, theta_component, theta_shifted


class UsageError(Exception):
    """Bad arguments or malformed input data; maps to exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --- serialization -------------------------------------------------------------


def _vec_json(v):
    out = [str(rat(x)) for x in v]
    return out[0] if len(out) == 1 else out


def _mat_json(m: RationalMatrix) -> list:
    return [[str(x) for x in row] for row in m.rows]


def _scalar_json(value, numeric=False):
    c = value if isinstance(value, CycScalar) else CycScalar.one() * value
    if numeric:
        z = c.numeric()
        return [z.real, z.imag]
    # canonical form: power-basis coordinates of Q(zeta_level), so equal
    # values always serialize identically.  Square roots are embedded as
    # Gauss sums upstream, hence the radical power is always zero; the
    # field is kept for schema stability
    level, rem = c.reduced()
    return [
        {"coeff": str(co), "exp": str(Fraction(j, level)), "rad": 0}
        for j, co in enumerate(rem)
        if co
    ]


def _label_json(label):
    if (
        isinstance(label, tuple)
        and len(label) == 2
        and isinstance(label[0], tuple)
        and label[0]
        and isinstance(label[0][0], tuple)
    ):
        (alpha, beta), d = label
        return {
            "alpha": _vec_json(alpha),
            "beta": _vec_json(beta),
            "class": _vec_json(d),
        }
    return _vec_json(label) if label else []


def _expansion_json(exp: FourierExpansion, numeric=False) -> dict:
    terms = []
    for (mm, r), coeff in sorted(exp.terms.items()):
        if isinstance(coeff, tuple):
            cj = [_scalar_json(c, numeric) for c in coeff]
        else:
            cj = _scalar_json(coeff, numeric)
        terms.append({"coeff": cj, "m": str(mm), "r": _vec_json(r)})
    return {"prec": str(exp.prec), "rank": exp.n, "terms": terms}


def _form_json(phi: JacobiFormData, numeric=False) -> dict:
    out = _expansion_json(phi.expansion, numeric)
    out["labels"] = [_label_json(l) for l in phi.jtype.labels]
    out["weight"] = str(phi.weight)
    return out


def _streams_json(h: ComponentVector, numeric=False) -> dict:
    comps = []
    for nu, stream in h.items():
        if not stream:
            continue
        comps.append(
            {
                "label": _vec_json(nu),
                "terms": [
                    {"coeff": _scalar_json(c, numeric), "n": str(n)}
                    for n, c in stream
                ],
            }
        )
    return {"components": comps, "prec": str(h.prec), "weight": str(h.weight)}


def _repmat_json(mat, numeric=False) -> dict:
    return {
        "labels": [_label_json(l) for l in mat.labels],
        "matrix": [[_scalar_json(x, numeric) for x in row] for row in mat.entries],
    }


# --- input parsing -------------------------------------------------------------


def _json_rat(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise UsageError(f"expected an integer or 'p/q' string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {x!r}: {exc}")


def _parse_vec(x, n=None) -> tuple:
    if not isinstance(x, list):
        x = [x]
    out = tuple(_json_rat(c) for c in x)
    if n is not None and len(out) != n:
        raise UsageError(f"expected a vector of length {n}, got {len(out)}")
    return out


def _parse_matrix(x) -> RationalMatrix:
    if not (isinstance(x, list) and x and all(isinstance(r, list) for r in x)):
        raise UsageError("expected a JSON array of matrix rows")
    if any(len(r) != len(x[0]) for r in x):
        raise UsageError("matrix rows have unequal lengths")
    return RationalMatrix([[_json_rat(c) for c in row] for row in x])


def _parse_scalar(x) -> CycScalar:
    if isinstance(x, list):
        total = CycScalar.zero()
        for t in x:
            if not isinstance(t, dict):
                raise UsageError("exact scalar terms must be JSON objects")
            if _json_rat(t.get("rad", 0)) != 0:
                raise UsageError("radical power must be 0 in exact scalars")
            total = total + CycScalar.e(
                _json_rat(t.get("exp", 0)), _json_rat(t.get("coeff", 1))
            )
        return total
    return CycScalar.one() * _json_rat(x)


def _parse_coeff(x):
    # a list of objects is one exact scalar; any other list is a coefficient
    # vector laid out along the type's labels
    if isinstance(x, list) and x and not all(isinstance(t, dict) for t in x):
        return tuple(_parse_scalar(c) for c in x)
    return _parse_scalar(x)


def _parse_expansion(raw, m: RationalMatrix, prec) -> FourierExpansion:
    if not isinstance(raw, list):
        raise UsageError("expansion must be a JSON array of {m, r, coeff} records")
    n = m.nrows
    m_inv = m.inverse()
    terms = {}
    for rec in raw:
        if not isinstance(rec, dict) or not {"m", "r", "coeff"} <= rec.keys():
            raise UsageError("each expansion term needs m, r and coeff fields")
        mm = _json_rat(rec["m"])
        r = _parse_vec(rec["r"], n)
        if not 0 <= mm <= prec:
            raise UsageError(f"term exponent {mm} outside [0, {prec}]")
        if 2 * mm < gram_eval(m_inv, r):
            raise UsageError(
                f"term at m={mm}, r={_vec_json(r)} violates support positivity"
            )
        key = (mm, r)
        if key in terms:
            raise UsageError(f"duplicate expansion term at m={mm}, r={_vec_json(r)}")
        terms[key] = _parse_coeff(rec["coeff"])
    return FourierExpansion(n, prec, terms)


def _parse_streams(raw, m, weight, prec) -> ComponentVector:
    if not isinstance(raw, list):
        raise UsageError("streams must be a JSON array of {label, terms} records")
    components = {}
    for rec in raw:
        if not isinstance(rec, dict) or not {"label", "terms"} <= rec.keys():
            raise UsageError("each stream needs label and terms fields")
        nu = _parse_vec(rec["label"], m.nrows)
        stream = {}
        for t in rec["terms"]:
            if not isinstance(t, dict) or not {"n", "coeff"} <= t.keys():
                raise UsageError("each stream term needs n and coeff fields")
            n = _json_rat(t["n"])
            if not 0 <= n <= prec:
                raise UsageError(f"stream exponent {n} outside [0, {prec}]")
            stream[n] = _parse_scalar(t["coeff"])
        components[nu] = stream
    return ComponentVector(m, weight, prec, components)


def _parse_elem(raw, n) -> HeisenbergElement:
    if not (isinstance(raw, list) and len(raw) in (2, 3)):
        raise UsageError("--elem takes JSON [lam, mu] or [lam, mu, kappa]")
    lam = _parse_vec(raw[0], n)
    mu = _parse_vec(raw[1], n)
    kappa = None
    if len(raw) == 3 and raw[2] is not None:
        kappa = _parse_matrix(raw[2])
    return HeisenbergElement.of(lam, mu, kappa)


# --- flag and file resolution --------------------------------------------------


_RAT_TOKEN = re.compile(r"-?\d+\s*/\s*\d+")


def _loads_inline(text):
    """json.loads that also accepts bare p/q tokens outside string literals,
    so --matrix '[[3/2]]' works without inner quotes."""
    out = []
    i = 0
    in_str = False
    while i < len(text):
        ch = text[i]
        if in_str:
            out.append(ch)
            if ch == "\\" and i + 1 < len(text):
                i += 1
                out.append(text[i])
            elif ch == '"':
                in_str = False
            i += 1
            continue
        if ch == '"':
            in_str = True
            out.append(ch)
            i += 1
            continue
        mt = _RAT_TOKEN.match(text, i)
        if mt:
            out.append('"' + mt.group().replace(" ", "") + '"')
            i = mt.end()
            continue
        out.append(ch)
        i += 1
    return json.loads("".join(out))


def _load_inputs(ns) -> dict:
    path = getattr(ns, "input", None)
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read --input file: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"--input file is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise UsageError("--input file must hold a JSON object")
    return data


def _json_field(ns, data, name, required=False):
    raw = getattr(ns, name.replace("-", "_"), None)
    if raw is not None:
        try:
            return _loads_inline(raw)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--{name} is not valid JSON: {exc}")
    if name in data:
        return data[name]
    if required:
        raise UsageError(f"missing --{name}")
    return None


def _matrix_field(ns, data, name="matrix", required=True):
    raw = _json_field(ns, data, name, required)
    return None if raw is None else _parse_matrix(raw)


def _vec_field(ns, data, name, n, required=False, default=None):
    raw = _json_field(ns, data, name, required)
    if raw is None:
        return default
    return _parse_vec(raw, n)


def _rat_field(ns, data, name, required=False, default=None):
    raw = getattr(ns, name, None)
    if raw is None and name in data:
        raw = data[name]
    if raw is None:
        if required:
            raise UsageError(f"missing --{name}")
        return default
    return _json_rat(raw)


def _type_field(ns, data, m):
    n = m.nrows
    alpha = _vec_field(ns, data, "alpha", n)
    beta = _vec_field(ns, data, "beta", n)
    if alpha is None and beta is None:
        return RhoMType(m)
    zero = vec([0] * n)
    return ThetaDecompType(m, alpha or zero, beta or zero)


# --- subcommands ---------------------------------------------------------------


def _cmd_snf(ns, data):
    u, d, v = snf(_matrix_field(ns, data))
    return {"d": _mat_json(d), "u": _mat_json(u), "v": _mat_json(v)}


def _cmd_split_index(ns, data):
    sp = split_index(_matrix_field(ns, data))
    return {
        "a": list(sp.a),
        "b": list(sp.b),
        "disc_order": sp.disc_order,
        "m_frac": _mat_json(sp.m_frac),
        "m_z": _mat_json(sp.m_z),
        "r_order": sp.r_order,
        "u": _mat_json(sp.u),
        "v": _mat_json(sp.v),
    }


def _cmd_disc(ns, data):
    g = disc_group(_matrix_field(ns, data))
    return {"order": g.order, "reps": [_vec_json(r) for r in g.reps]}


def _cmd_admissible(ns, data):
    return {"admissible": is_admissible_index(_matrix_field(ns, data))}


def _cmd_theta(ns, data):
    m = _matrix_field(ns, data)
    nu = _vec_field(ns, data, "nu", m.nrows, required=True)
    prec = _rat_field(ns, data, "prec", required=True)
    return _expansion_json(theta_component(m, nu, prec), ns.numeric)


def _cmd_theta_shifted(ns, data):
    m = _matrix_field(ns, data)
    n = m.nrows
    zero = vec([0] * n)
    nu = _vec_field(ns, data, "nu", n, required=True)
    alpha = _vec_field(ns, data, "alpha", n, default=zero)
    beta = _vec_field(ns, data, "beta", n, default=zero)
    prec = _rat_field(ns, data, "prec", required=True)
    return _expansion_json(theta_shifted(m, nu, alpha, beta, prec), ns.numeric)


def _cmd_rep(ns, data):
    m = _matrix_field(ns, data)
    n = m.nrows
    elem_raw = _json_field(ns, data, "elem")
    if (ns.gen is None) == (elem_raw is None):
        raise UsageError("exactly one of --gen or --elem is required")
    alpha = _vec_field(ns, data, "alpha", n)
    beta = _vec_field(ns, data, "beta", n)
    induced = alpha is not None or beta is not None
    zero = vec([0] * n)
    alpha, beta = alpha or zero, beta or zero
    if ns.gen is not None:
        mat = (
            rho_induced_matrix(m, alpha, beta, ns.gen)
            if induced
            else rho_M_matrix(m, ns.gen)
        )
    else:
        el = _parse_elem(elem_raw, n)
        mat = pi_matrix(m, alpha, beta, el) if induced else rho_M_matrix(m, el)
    return _repmat_json(mat, ns.numeric)


def _cmd_rep_check(ns, data):
    m = _matrix_field(ns, data)
    report = rho_relations_report(m)
    report["gauss_sum"] = _scalar_json(gauss_sum(m))
    return report


def _cmd_orbit(ns, data):
    m = _matrix_field(ns, data)
    n = m.nrows
    alpha = _vec_field(ns, data, "alpha", n, required=True)
    beta = _vec_field(ns, data, "beta", n, required=True)
    orb = orbit_alpha_beta(m, alpha, beta)
    return {
        "pairs": [
            {"alpha": _vec_json(a), "beta": _vec_json(b)} for a, b in orb.pairs
        ],
        "s_perm": list(orb.s_perm),
        "size": len(orb.pairs),
        "t_perm": list(orb.t_perm),
    }


def _cmd_pi_iso(ns, data):
    m1 = _matrix_field(ns, data)
    m2 = _matrix_field(ns, data, "matrix2", required=False) or m1
    n = m1.nrows
    zero = vec([0] * n)
    alpha1 = _vec_field(ns, data, "alpha", n, default=zero)
    beta1 = _vec_field(ns, data, "beta", n, default=zero)
    alpha2 = _vec_field(ns, data, "alpha2", m2.nrows, default=zero)
    beta2 = _vec_field(ns, data, "beta2", m2.nrows, default=zero)
    res = pi_isomorphism(m1, alpha1, beta1, m2, alpha2, beta2)
    return {
        "intertwiner": (
            None
            if res.intertwiner is None
            else _repmat_json(res.intertwiner, ns.numeric)
        ),
        "isomorphic": res.isomorphic,
        "witness": res.witness,
    }


def _cmd_rd(ns, data):
    return {"rd": str(rd(_matrix_field(ns, data)))}


def _cmd_md(ns, data):
    return {"md": str(md(_matrix_field(ns, data)))}


def _cmd_reduce(ns, data):
    rb = minkowski_reduce(_matrix_field(ns, data))
    return {"gram": _mat_json(rb.gram), "transform": _mat_json(rb.transform)}


def _cmd_enumerate_coset(ns, data):
    m = _matrix_field(ns, data)
    nu = _vec_field(ns, data, "nu", m.nrows, required=True)
    bound = _rat_field(ns, data, "bound", required=True)
    sp = split_index(m)
    if not is_integral_vector(sp.m_frac.inverse() * nu):
        raise NotInGroup(f"({_vec_json(nu)}) is not in m Z^n + Z^n")
    if bound < 0:
        return {"count": 0, "points": []}
    mz = sp.m_z
    q = mz.T * m.inverse() * mz
    points = [
        {"point": _vec_json(vadd(nu, mz * u)), "value": str(val / 2)}
        for u, val in enumerate_coset_points(q, mz.inverse() * nu, 2 * bound)
    ]
    return {"count": len(points), "points": points}


def _form_from_inputs(ns, data) -> JacobiFormData:
    m = _matrix_field(ns, data)
    weight = _rat_field(ns, data, "weight", required=True)
    prec = _rat_field(ns, data, "prec", required=True)
    jtype = _type_field(ns, data, m)
    raw = _json_field(ns, data, "expansion", required=True)
    exp = _parse_expansion(raw, m, prec)
    return JacobiFormData(weight, m, jtype, exp)


def _cmd_decompose(ns, data):
    return _streams_json(theta_decompose(_form_from_inputs(ns, data)), ns.numeric)


def _cmd_reconstruct(ns, data):
    m = _matrix_field(ns, data)
    n = m.nrows
    weight = _rat_field(ns, data, "weight", required=True)
    prec = _rat_field(ns, data, "prec", required=True)
    alpha = _vec_field(ns, data, "alpha", n)
    beta = _vec_field(ns, data, "beta", n)
    orbit = None
    if alpha is not None or beta is not None:
        zero = vec([0] * n)
        orbit = (alpha or zero, beta or zero)
    raw = _json_field(ns, data, "streams", required=True)
    h = _parse_streams(raw, m, weight - Fraction(n, 2), prec)
    return _form_json(theta_reconstruct(h, m, orbit, prec), ns.numeric)


def _cmd_vanishing_bound(ns, data):
    weight = _rat_field(ns, data, "weight", required=True)
    if ns.vv:
        if _json_field(ns, data, "matrix") is not None:
            raise UsageError("--vv does not take a matrix")
        return {"bound": str(vv_vanishing_bound(weight))}
    return {"bound": str(vanishing_bound(weight, _matrix_field(ns, data)))}


def _cmd_certify_vanishing(ns, data):
    res = certify_vanishing(_form_from_inputs(ns, data))
    witness = None
    if res.witness is not None:
        mm, r, label = res.witness
        witness = {"label": _label_json(label), "m": str(mm), "r": _vec_json(r)}
    return {"bound": str(res.bound), "vanishes": res.vanishes, "witness": witness}


def _cmd_cycle_generators(ns, data):
    gens = cycle_generators(ns.rank, ns.signature, ns.denominator, ns.cap_scale)
    return {
        "count": len(gens),
        "matrices": [_mat_json(g.t) for g in gens.matrices],
    }


_HANDLERS = {
    "snf": _cmd_snf,
    "split-index": _cmd_split_index,
    "disc": _cmd_disc,
    "admissible": _cmd_admissible,
    "theta": _cmd_theta,
    "theta-shifted": _cmd_theta_shifted,
    "rep": _cmd_rep,
    "rep-check": _cmd_rep_check,
    "orbit": _cmd_orbit,
    "pi-iso": _cmd_pi_iso,
    "rd": _cmd_rd,
    "md": _cmd_md,
    "reduce": _cmd_reduce,
    "enumerate-coset": _cmd_enumerate_coset,
    "decompose": _cmd_decompose,
    "reconstruct": _cmd_reconstruct,
    "vanishing-bound": _cmd_vanishing_bound,
    "certify-vanishing": _cmd_certify_vanishing,
    "cycle-generators": _cmd_cycle_generators,
}


def _build_parser() -> _Parser:
    p = _Parser(prog="jacobiq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_, *, matrix=True):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.add_argument("--input", metavar="FILE", help="JSON object file supplying omitted data flags")
        if matrix:
            sp.add_argument("--matrix", help="matrix as JSON rows, entries integers or 'p/q' strings")
        return sp

    def ab(sp):
        sp.add_argument("--alpha", help="rational vector as JSON")
        sp.add_argument("--beta", help="rational vector as JSON")

    def numeric(sp):
        sp.add_argument("--numeric", action="store_true", help="emit coefficients as [re, im] doubles")

    add("snf", "Smith normal form u d v of a rational matrix")
    add("split-index", "integral and fractional Smith factors of an index")
    add("disc", "discriminant group order and representatives")
    add("admissible", "test the even-integrality condition on an index")

    sp = add("theta", "q-expansion of one theta component")
    sp.add_argument("--nu", help="discriminant class as JSON vector")
    sp.add_argument("--prec", help="truncation exponent, rational")
    numeric(sp)

    sp = add("theta-shifted", "theta component twisted by a character pair")
    sp.add_argument("--nu", help="discriminant class as JSON vector")
    ab(sp)
    sp.add_argument("--prec", help="truncation exponent, rational")
    numeric(sp)

    sp = add("rep", "exact matrix of a generator in the theta representation")
    sp.add_argument("--gen", choices=("S", "T"), help="modular generator")
    sp.add_argument("--elem", help="Heisenberg element as JSON [lam, mu] or [lam, mu, kappa]")
    ab(sp)
    numeric(sp)

    add("rep-check", "verdicts for the defining relations of the representation")

    sp = add("orbit", "orbit of a character pair under the two modular moves")
    ab(sp)

    sp = add("pi-iso", "decide whether two coset representations are intertwined")
    sp.add_argument("--matrix2", help="second index matrix, defaults to --matrix")
    ab(sp)
    sp.add_argument("--alpha2", help="second character, rational vector as JSON")
    sp.add_argument("--beta2", help="second character, rational vector as JSON")
    numeric(sp)

    add("rd", "covering radius value rd of a positive definite matrix")
    add("md", "largest reduced diagonal entry md")
    add("reduce", "Minkowski reduced Gram matrix and transform")

    sp = add("enumerate-coset", "coset points with exponent at most the bound")
    sp.add_argument("--nu", help="coset offset as JSON vector")
    sp.add_argument("--bound", help="exponent cutoff, rational")

    sp = add("decompose", "split a form's coefficients into theta streams")
    sp.add_argument("--weight", help="half integral weight, rational")
    sp.add_argument("--prec", help="expansion truncation, rational")
    ab(sp)
    sp.add_argument("--expansion", help="JSON array of {m, r, coeff} records")
    numeric(sp)

    sp = add("reconstruct", "assemble a form from theta streams")
    sp.add_argument("--weight", help="half integral weight of the form, rational")
    sp.add_argument("--prec", help="target truncation, rational")
    ab(sp)
    sp.add_argument("--streams", help="JSON array of {label, terms} records")
    numeric(sp)

    sp = add("vanishing-bound", "coefficient bound that forces a form to vanish")
    sp.add_argument("--weight", help="half integral weight, rational")
    sp.add_argument("--vv", action="store_true", help="vector valued variant, no index matrix")

    sp = add("certify-vanishing", "scan stored coefficients below the bound")
    sp.add_argument("--weight", help="half integral weight, rational")
    sp.add_argument("--prec", help="expansion truncation, rational")
    ab(sp)
    sp.add_argument("--expansion", help="JSON array of {m, r, coeff} records")

    sp = add("cycle-generators", "finite generator set of moment matrices", matrix=False)
    sp.add_argument("--rank", type=int, required=True, help="matrix size r, 2 <= r < 5")
    sp.add_argument("--signature", type=int, required=True, help="weight parameter n >= 1")
    sp.add_argument("--denominator", type=int, required=True, help="denominator bound d >= 1")
    sp.add_argument("--cap-scale", type=int, default=1, dest="cap_scale", help="multiply internal search caps, for stability checks")

    return p


def _error_code(exc: DomainError) -> str:
    return re.sub(r"(?<!^)(?=[A-Z])", "-", type(exc).__name__).lower()


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


def run(argv):
    """Parse argv, dispatch, and return the JSON payload for the result."""
    ns = _build_parser().parse_args(argv)
    data = _load_inputs(ns)
    return _HANDLERS[ns.command](ns, data)


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        payload = run(argv)
    except UsageError as exc:
        _emit({"code": "usage", "message": str(exc)})
        return 2
    except ValueError as exc:
        _emit({"code": "invalid-value", "message": str(exc)})
        return 2
    except DomainError as exc:
        _emit({"code": _error_code(exc), "message": str(exc)})
        return 1
    except AssertionError as exc:
        _emit(
            {
                "code": "invariant-violation",
                "message": str(exc) or "internal invariant failed",
            }
        )
        return 1
    _emit(payload)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
