from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critgraph.constructions import catalog_g4_k4_w5, k4_ring_family
from critgraph.errors import ArityError, ConstructionError, EvenOperandCount, RecipeSyntaxError, UnknownBase
from critgraph.graph import complete_bipartite, complete_graph
from critgraph.io import encode_edgelist, encode_graph6, evaluate_recipe, format_recipe, parse_recipe
from critgraph.io.recipe import Arg, Base, Call, FileLeaf, Graph6Leaf


def build(text: str, **kw):
    return evaluate_recipe(parse_recipe(text, allow_even=kw.get("unsafe_even", False)), **kw)


class TestExamples:
    def test_ring3(self):
        g, cg = build("ring(K4@(0,1,2), K4@(0,1,2), K4@(0,1,2))")
        assert g == k4_ring_family(1).graph and cg.apex is not None

    def test_g3(self):
        g, _ = build("g3(K4@(0,1,2),K4@(0,1,2))")
        assert (g.n, g.m) == (8, 14)

    def test_g4(self):
        g, _ = build("g4(K4@(0,1,2),W5@(0,1,2))")
        assert g == catalog_g4_k4_w5()

    def test_hajos(self):
        g, _ = build("hajos(K4@[0,1],K4@[0,1])")
        assert (g.n, g.m) == (7, 11)

    def test_nested(self):
        g, _ = build("g3(ring(K4@(0,1,2),K4@(0,1,2),K4@(0,1,2))@(0,1,3),K4@(0,1,2))")
        assert g.n == 10 + 4 - 1 + 1

    def test_multiline_whitespace(self):
        tree = parse_recipe("ring(\n  K4 @ (0, 1, 2),\n  K4@(0,1,2),\n  K4@(0,1,2)\n)\n")
        assert format_recipe(tree) == "ring(K4@(0,1,2),K4@(0,1,2),K4@(0,1,2))"

    def test_bare_leaf(self):
        g, cg = build("K3,3")
        assert g == complete_bipartite(3, 3) and cg is None

    def test_bipartite_operand(self):
        tree = parse_recipe("hajos(K2,3@[0,2],K4@[0,1])")
        assert tree.args[0].expr == Base("K2,3")


class TestLeaves:
    def test_graph6_with_at_sign(self):
        # "E@hW" contains '@'; the token length comes from its own header
        tree = parse_recipe("hajos(g6:E@hW@[0,4],K4@[0,1])")
        assert tree.args[0].expr == Graph6Leaf("E@hW")
        assert tree.args[0].handle == (0, 4)

    def test_graph6_evaluates(self):
        g, _ = build(f"g6:{encode_graph6(complete_graph(4))}")
        assert g == complete_graph(4)

    def test_file_leaf(self, tmp_path):
        (tmp_path / "k4.el").write_text(encode_edgelist(complete_graph(4)))
        (tmp_path / "w.g6").write_text("C~\n")
        tree = parse_recipe("g3(file:k4.el@(0,1,2),file:w.g6@(0,1,2))")
        assert tree.args[0].expr == FileLeaf("k4.el")
        g, _ = evaluate_recipe(tree, base_dir=tmp_path)
        assert (g.n, g.m) == (8, 14)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            build("file:nope.el", base_dir=tmp_path)


class TestErrors:
    def test_even_ring(self):
        with pytest.raises(EvenOperandCount, match="odd operand count required"):
            parse_recipe("ring(K4@(0,1,2),K4@(0,1,2),K4@(0,1,2),K4@(0,1,2))")
        assert issubclass(EvenOperandCount, ArityError)
        assert issubclass(EvenOperandCount, ConstructionError)

    def test_even_ring_unsafe(self):
        g, _ = build("ring(K4@(0,1,2),K4@(0,1,2),K4@(0,1,2),K4@(0,1,2))", unsafe_even=True)
        assert (g.n, g.m) == (13, 24)

    @pytest.mark.parametrize("text", ["g3(K4@(0,1,2))", "hajos(K4@[0,1],K4@[0,1],K4@[0,1])", "ring(K4@(0,1,2))"])
    def test_arity(self, text):
        with pytest.raises(ArityError):
            parse_recipe(text)

    @pytest.mark.parametrize("text,line,col", [
        ("g3(K4@(0,1,2),K4@(0,1,2)", 1, 25),
        ("g3(K4@(0,1),K4@(0,1,2))", 1, 11),
        ("g3(\n  K4@(0,1,2),\n  K4(0,1,2))", 3, 5),
        ("K4 K4", 1, 4),
        ("", 1, 1),
    ])
    def test_syntax_positions(self, text, line, col):
        with pytest.raises(RecipeSyntaxError) as info:
            parse_recipe(text)
        assert (info.value.line, info.value.column) == (line, col)

    @pytest.mark.parametrize("text", ["X9", "C2", "frob(K4@(0,1,2),K4@(0,1,2))"])
    def test_unknown(self, text):
        with pytest.raises(UnknownBase):
            parse_recipe(text)

    def test_truncated_graph6(self):
        with pytest.raises(RecipeSyntaxError):
            parse_recipe("g6:E@h")


bases = st.sampled_from(["K4", "W5", "K3", "C5", "P3", "K2,3", "W7"]).map(Base)
leaves = st.one_of(bases, st.sampled_from(["C~", "E@hW", "A_"]).map(Graph6Leaf), st.just(FileLeaf("dir/g.el")))


def _calls(children):
    ints = st.integers(0, 99)
    triple = st.tuples(ints, ints, ints)
    pair = st.tuples(ints, ints)
    return st.one_of(
        st.builds(lambda a: Call("ring", tuple(a)), st.lists(st.builds(Arg, children, triple), min_size=3, max_size=5).filter(lambda a: len(a) % 2)),
        st.builds(lambda op, a, b: Call(op, (a, b)), st.sampled_from(["g3", "g4"]), st.builds(Arg, children, triple), st.builds(Arg, children, triple)),
        st.builds(lambda a, b: Call("hajos", (a, b)), st.builds(Arg, children, pair), st.builds(Arg, children, pair)),
    )


@settings(max_examples=200, deadline=None)
@given(st.recursive(leaves, _calls, max_leaves=8))
def test_format_parse_roundtrip(tree):
    assert parse_recipe(format_recipe(tree)) == tree
