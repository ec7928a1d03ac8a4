from .poset import Poset, chain, check_poset_axioms


def test_chain_covers():
    P = chain(['a', 'b', 'c'])
    assert P.covers == [('a', 'b'), ('b', 'c')]
    assert P.ge('a', 'c')
    assert P.ge('b', 'b')
    assert not P.gt('c', 'a')
    assert P.maximum() == 'a'
    assert P.minimum() == 'c'


def test_antichain_has_no_extremum():
    P = Poset(['x', 'y'], [])
    assert P.maximal_elements() == ['x', 'y']
    assert P.maximum() is None
    assert P.covers == []


def test_axioms():
    assert check_poset_axioms(chain([1, 2, 3, 4]))
    assert not check_poset_axioms(Poset([1, 2, 3], [(1, 2), (2, 3)]))
    assert not check_poset_axioms(Poset([1, 2], [(1, 2), (2, 1)]))


def test_quotient_pairs():
    P = chain([('a', 1), ('a', 2), ('b', 1)])
    assert P.quotient_pairs(lambda x: x[0]) == {('a', 'b')}


def test_export_dot():
    P = chain(['top', 'mid "q"', 'bottom'])
    dot = P.export_dot()
    assert dot.splitlines() == ['digraph poset {',
                                '  "n0" [label="top"];',
                                '  "n1" [label="mid \\"q\\""];',
                                '  "n2" [label="bottom"];',
                                '  "n0" -> "n1";',
                                '  "n1" -> "n2";',
                                '}']
    assert dot.endswith('}\n')


def test_export_dot_custom_ids():
    P = chain(['a', 'b'])
    dot = P.export_dot(labels=str.upper, ids=lambda x: 'id-' + x)
    assert '  "id-a" [label="A"];' in dot
    assert '  "id-a" -> "id-b";' in dot
