import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from patternal.formulas import cp_bounds, pattern_count, tp_count
from patternal.graphs import build_pattern_graph, is_chordless
from patternal.limits import InstanceTooLarge
from patternal.ucycle import (
    Circuit,
    UCycle,
    class_circuits,
    generate_ucycle,
    hamiltonian_circuit,
    lower_bound_path,
    parse_ucycle,
    ucycle_from_circuit,
    validate_ucycle,
)
from patternal.words import is_pattern, parse_word

SMALL = [(n, m) for n in range(1, 6) for m in range(1, 5)]


def test_class_circuits_33():
    circuits = class_circuits(3, 3)
    assert sorted(len(c) for c in circuits) == [1, 3, 3, 3, 3]
    assert all(c.is_valid() for c in circuits)
    assert all(c.vertices[0] == min(c.vertices) for c in circuits)


def test_class_circuits_small():
    assert [c.vertices for c in class_circuits(4, 1)] == [((1, 1, 1, 1),)]
    two = [c for c in class_circuits(4, 2) if (1, 2, 1, 2) in c.vertices]
    assert two[0].vertices == ((1, 2, 1, 2), (2, 1, 2, 1))


@pytest.mark.parametrize("n, m", SMALL)
def test_class_circuits_partition(n, m):
    circuits = class_circuits(n, m)
    seen = [v for c in circuits for v in c.vertices]
    assert len(seen) == len(set(seen)) == pattern_count(n, m).value
    assert len(circuits) == tp_count(n, m).value


def test_hamiltonian_examples():
    assert hamiltonian_circuit(2, 2).vertices == ((1, 1), (1, 2), (2, 1))
    assert hamiltonian_circuit(1, 3).vertices == ((1,),)
    h = hamiltonian_circuit(3, 3)
    assert len(h) == 13 and h.is_hamiltonian()


@pytest.mark.parametrize("chained", [False, True])
@pytest.mark.parametrize("n, m", SMALL + [(6, 3), (6, 4), (5, 5)])
def test_hamiltonian_verified(n, m, chained):
    h = hamiltonian_circuit(n, m, chained=chained, verify=True)
    assert h.is_hamiltonian()
    g = build_pattern_graph(n, m)
    assert all(g.has_arc(u, v) for u, v in h.arcs())


def test_hamiltonian_deterministic():
    assert hamiltonian_circuit(4, 3) == hamiltonian_circuit(4, 3)


def test_hamiltonian_cap():
    with pytest.raises(InstanceTooLarge):
        hamiltonian_circuit(6, 6, max_vertices=100)


def test_circuit_validity_checks():
    assert not Circuit(((1, 1), (1, 1)), 2, 2).is_valid()
    assert not Circuit(((1, 2), (1, 1)), 2, 2).is_valid()
    assert not Circuit(((1, 3),), 2, 3).is_valid()
    assert not Circuit((), 2, 2).is_valid()
    assert Circuit(((1, 2), (2, 1)), 2, 2).is_valid()
    assert not Circuit(((1, 2), (2, 1)), 2, 2).is_hamiltonian()


def test_ucycle_examples():
    assert ucycle_from_circuit(Circuit(((1, 1), (1, 2), (2, 1)), 2, 2)).letters == (1, 1, 2)
    assert ucycle_from_circuit(Circuit(((1,),), 1, 4)).letters == (1,)
    assert len(generate_ucycle(3, 3)) == 13
    with pytest.raises(ValueError):
        ucycle_from_circuit(Circuit(((1, 2), (2, 1)), 2, 2))


@pytest.mark.parametrize(
    "text, n, m, ok",
    [
        ("112", 2, 2, True),
        ("121", 2, 2, True),
        ("111", 2, 2, False),
        ("122", 2, 2, False),
        ("1122", 2, 2, False),
        ("1", 1, 1, True),
    ],
)
def test_validate_examples(text, n, m, ok):
    assert validate_ucycle(UCycle(parse_word(text), n, m)) is ok


@pytest.mark.parametrize("n, m", SMALL)
def test_generated_cycles_validate(n, m):
    u = generate_ucycle(n, m)
    assert validate_ucycle(u)
    h = hamiltonian_circuit(n, m)
    assert u.windows() == list(h.vertices)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.integers(0, 50))
def test_rotated_cycles_still_validate(n, m, k):
    u = generate_ucycle(n, m)
    k %= len(u)
    assert validate_ucycle(UCycle(u.letters[k:] + u.letters[:k], n, m))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 4), st.integers(2, 3), st.data())
def test_perturbed_cycles_fail(n, m, data):
    u = generate_ucycle(n, m)
    i = data.draw(st.integers(0, len(u) - 1))
    x = data.draw(st.integers(1, m).filter(lambda x: x != u.letters[i]))
    bad = u.letters[:i] + (x,) + u.letters[i + 1:]
    assert not validate_ucycle(UCycle(bad, n, m))


def test_text_roundtrip():
    u = generate_ucycle(3, 3)
    assert u.to_text().splitlines()[0] == "ucycle 3 3 13"
    assert parse_ucycle(u.to_text()) == u
    wide = generate_ucycle(2, 12)
    assert parse_ucycle(wide.to_text()) == wide


@pytest.mark.parametrize("text", ["", "ucycle 2 2 3\n", "ucycle 2 2 4\n112\n", "cycle 2 2 3\n112\n", "ucycle 2 2\n112\n"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_ucycle(text)


# -- lower bound path -------------------------------------------------------------


def test_lower_bound_32():
    res = lower_bound_path(3, 2)
    assert res.lifted and res.verified_chordless
    assert res.path.vertices == ((1, 1, 2), (1, 2, 1))
    assert res.length >= 2


def test_lower_bound_degenerate_base():
    res = lower_bound_path(2, 3)
    assert not res.lifted and res.verified_chordless and res.length >= 1
    with pytest.raises(ValueError):
        lower_bound_path(1, 2)


@pytest.mark.parametrize("n, m", [(n, m) for n in range(3, 6) for m in range(2, 5)])
def test_lower_bound_properties(n, m):
    res = lower_bound_path(n, m)
    g = build_pattern_graph(n, m)
    assert res.verified_chordless and is_chordless(g, res.path)
    assert res.path.is_walk_in(g) and res.path.is_simple()
    assert all(is_pattern(v) for v in res.path.vertices)
    assert (1,) * n not in res.path.vertices
    assert res.length >= cp_bounds(n, m).lower - 1
    if m == 2:
        assert res.length <= 2 ** (n - 1) - 1


@pytest.mark.parametrize("n, m", [(3, 2), (4, 2), (3, 3), (4, 3), (5, 3)])
def test_lift_leaves_exactly_one_chord(n, m):
    # the closing arc of the opened circuit is the only chord, so trimming drops one vertex
    assert lower_bound_path(n, m).length == pattern_count(n - 1, m).value - 1
