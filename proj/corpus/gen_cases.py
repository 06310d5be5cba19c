#!/usr/bin/env python3
# Generates the repetitive corpus families (O(-n) lifts/round-trips, quadric
# potentials, dual Newton counts, quadric reductions). Expected outputs are
# transcribed displays in the engine's canonical order, written here by the
# closed-form patterns -- no engine code involved.
import json
import os

root = os.path.dirname(os.path.abspath(__file__))


def write_case(name, input_obj, expected_text):
    d = os.path.join(root, name)
    os.makedirs(d, exist_ok=True)
    with open(os.path.join(d, "input.json"), "w") as f:
        json.dump(input_obj, f, indent=2)
        f.write("\n")
    with open(os.path.join(d, "expected.txt"), "w") as f:
        f.write(expected_text + "\n")


def base_potential(n):
    b2_area = {"constant": 1, "coefficients": {"u": -1}}
    if n == 1:
        b2_area["coefficients"]["nu"] = 1
    elif n > 1:
        b2_area["coefficients"]["nu"] = n
    return {
        "variables": ["z"],
        "parameters": ["u", "nu"] if n > 0 else ["u"],
        "terms": [
            {"coefficient": 1, "exponents": [1],
             "area": {"coefficients": {"u": 1}}, "class": "b1"},
            {"coefficient": 1, "exponents": [-1], "area": b2_area, "class": "b2"},
        ],
    }


def lift_spec(n):
    return {
        "fiber_variable": "y2",
        "degree": n,
        "fiber_class_area": {"coefficients": {"nu": 1}} if n > 0 else {},
        "weights": {"b1": 0, "b2": n},
        "base_variables": ["y1"],
    }


def nu_part(n):
    if n == 0:
        return ""
    if n == 1:
        return "+nu"
    return "+%d*nu" % n


# O(-n) lifts: y1 T^u + y1^-1 y2^n T^{1+n*nu-u}; canonical order puts the
# fiber term first once its total degree n-1 exceeds 1 (n >= 3).
for n in range(0, 5):
    t_base = "y1*T^{u}"
    if n == 0:
        t_fiber = "y1^-1*T^{1-u}"
    elif n == 1:
        t_fiber = "y1^-1*y2*T^{1%s-u}" % nu_part(n)
    else:
        t_fiber = "y1^-1*y2^%d*T^{1%s-u}" % (n, nu_part(n))
    if n >= 3:
        text = t_fiber + " + " + t_base
    else:
        text = t_base + " + " + t_fiber
    write_case("o_lift_n%d" % n,
               {"run": "lift", "potential": base_potential(n), "lift": lift_spec(n)},
               text)

# Round trips: reduce the lifted potential along the fiber direction; the
# fiber level stays symbolic, so no constraints are needed.
for n in range(0, 5):
    action = {
        "matrix": [[0, 1]],
        "offsets": ["0"],
        "level": ["0"],
        "constraints": [],
        "overrides": {"*": "semistable"},
        "naming": {"variables": ["z"], "parameters": "keep"},
    }
    if n == 0:
        text = "z*T^{u} + z^-1*T^{1-u}"
    else:
        text = "z*T^{u} + z^-1*T^{1%s-u}" % nu_part(n)
    write_case("o_roundtrip_n%d" % n,
               {"run": "roundtrip", "potential": base_potential(n),
                "lift": lift_spec(n), "action": action},
               text)


def quadric_text(n):
    # descending (degree, lex) order of the n+2 terms
    terms = ["y1*y2*T^{u1+u2}", "2*y2*T^{u2}"]
    for j in range(n - 1, 1, -1):  # f_j, j = n-1 .. 2
        terms.append("y%d^-1*y%d*T^{u%d-u%d}" % (j, j + 1, j + 1, j))
    terms.append("y1^-1*y2*T^{u2-u1}")
    terms.append("y%d^-1*T^{%d-u%d}" % (n, n, n))
    return " + ".join(terms)


for n in range(2, 7):
    write_case("quadric_potential_n%d" % n, {"run": "quadric", "n": n}, quadric_text(n))


def fmt_pt(v):
    return "(" + ",".join(str(x) for x in v) + ")"


for n in range(2, 9):
    # vertices of the dual: equ-style list, sorted lexicographically
    verts = []
    v = [0] * n
    v[0], v[1] = -1, 1
    verts.append(v[:])
    for k in range(2, n):  # (0^{k-1}, -1, 1, 0...)
        v = [0] * n
        v[k - 1], v[k] = -1, 1
        verts.append(v[:])
    v = [0] * n
    v[n - 1] = -1
    verts.append(v[:])
    v = [0] * n
    v[0], v[1] = 1, 1
    verts.append(v[:])
    pts = sorted(verts + [[0] * n] + [[0, 1] + [0] * (n - 2)])
    verts_sorted = sorted(verts)
    lines = ["vertices: %d" % len(verts), "lattice_points: %d" % len(pts), "vertex_set:"]
    lines += [fmt_pt(v) for v in verts_sorted]
    lines.append("lattice_point_set:")
    lines += [fmt_pt(p) for p in pts]
    write_case("quadric_dual_n%d" % n, {"run": "dual_count", "quadric_n": n},
               "\n".join(lines))

# Quadric reductions to the n=2 potential: kernel {e3..en}, levels u_j = j-1,
# classes f3..fn supplied unstable.
for n in range(3, 7):
    matrix = []
    for j in range(3, n + 1):
        row = [0] * n
        row[j - 1] = 1
        matrix.append(row)
    overrides = {"*": "semistable"}
    for j in range(3, n + 1):
        overrides["f%d" % j] = "unstable"
    action = {
        "matrix": matrix,
        "offsets": ["0"] * (n - 2),
        "level": [str(j - 1) for j in range(3, n + 1)],
        "overrides": overrides,
        "naming": {"variables": ["y1", "y2"], "parameters": "keep"},
    }
    write_case("quadric_reduce_n%d" % n,
               {"run": "reduce", "quadric_n": n, "action": action},
               quadric_text(2))

print("corpus cases written")
