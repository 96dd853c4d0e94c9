from fractions import Fraction

import pytest

from hopdomlab.graph import Graph
from hopdomlab.solvers import CHECKERS, Problem, solve_minimum
from hopdomlab.geometry import (ADJ_MAX, NONADJ_MIN, Disk, EmbeddingError,
                                GridEmbedding, PlacementError,
                                disk_intersection_edges, embed_orthogonal,
                                intersection_graph, layout_dot, layout_svg,
                                printed_closed_form, read_embedding,
                                reduce_unit_disk, structural_offset,
                                template_edges, unit_disk_extract_cover,
                                unit_disk_forward_certificate,
                                validate_embedding, write_embedding,
                                write_layout_csv)

from conftest import C, K, P

HD = Problem.HOP_DOM
SD = Problem.TWO_STEP_DOM


def test_embed_k2_and_c4():
    emb = embed_orthogonal(K(2))
    assert validate_embedding(emb)
    assert emb.grid_lengths() == (4,)
    # C4 places as the unit square, scaled
    emb = embed_orthogonal(C(4))
    assert validate_embedding(emb)
    assert emb.grid_lengths() == (4, 4, 4, 4)


def test_embed_k4_has_bends():
    emb = embed_orthogonal(K(4))
    assert validate_embedding(emb)
    bends = 0
    for path in emb.paths:
        for a, b, c in zip(path, path[1:], path[2:]):
            if (b[0] - a[0], b[1] - a[1]) != (c[0] - b[0], c[1] - b[1]):
                bends += 1
    assert bends > 0


def test_embed_rejections():
    with pytest.raises(EmbeddingError):
        embed_orthogonal(K(5))  # nonplanar
    star5 = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    with pytest.raises(EmbeddingError):
        embed_orthogonal(star5)  # degree 5
    with pytest.raises(EmbeddingError):
        embed_orthogonal(K(2), scale=1)


def test_validate_embedding_negatives():
    # crossing interiors
    e = GridEmbedding(
        n=4, edges=((0, 1), (2, 3)),
        coords=((0, 1), (2, 1), (1, 0), (1, 2)),
        paths=(((0, 1), (1, 1), (2, 1)), ((1, 0), (1, 1), (1, 2))))
    check = validate_embedding(e)
    assert not check and any("shared" in d for d in check.diagnostics)
    # grid length 1
    e = GridEmbedding(n=2, edges=((0, 1),), coords=((0, 0), (1, 0)),
                      paths=(((0, 0), (1, 0)),))
    check = validate_embedding(e)
    assert not check and any("grid length" in d for d in check.diagnostics)
    # diagonal step
    e = GridEmbedding(n=2, edges=((0, 1),), coords=((0, 0), (2, 2)),
                      paths=(((0, 0), (1, 1), (2, 2)),))
    assert not validate_embedding(e)


def k2_layout(problem, k=2):
    emb = embed_orthogonal(K(2), scale=k)
    layout = reduce_unit_disk(problem, emb)
    return emb, layout


def test_k2_layout_counts():
    _, lay = k2_layout(HD)
    assert len(lay.disks) == 28 and lay.offset == 7
    _, lay = k2_layout(SD)
    assert len(lay.disks) == 38 and lay.offset == 15


def test_offsets_closed_forms():
    assert structural_offset(HD, [2]) == 7
    assert structural_offset(HD, [2, 3]) == 7 + 11
    assert structural_offset(SD, [2]) == 15
    assert printed_closed_form(HD, [2]) == 7  # agrees for hop domination
    assert printed_closed_form(SD, [2]) == 23  # printed form disagrees: 8k-1 = 15


def test_template_fidelity_and_separation():
    for problem in (HD, SD):
        for g, scale in ((K(2), 2), (P(3), 2), (C(4), 2), (K(4), 2)):
            emb = embed_orthogonal(g, scale=scale)
            lay = reduce_unit_disk(problem, emb)
            expected = template_edges(lay)
            assert set(intersection_graph(lay).edges()) == expected
            # every pair sits outside the ambiguity band
            for i in range(len(lay.disks)):
                xi, yi = lay.disks[i].center
                for j in range(i + 1, len(lay.disks)):
                    xj, yj = lay.disks[j].center
                    d2 = (xi - xj) ** 2 + (yi - yj) ** 2
                    if (i, j) in expected:
                        assert d2 <= ADJ_MAX ** 2
                    else:
                        assert d2 >= NONADJ_MIN ** 2


def test_intersection_examples():
    mk = lambda pts: [Disk(center=(Fraction(x), Fraction(y)), role="t") for x, y in pts]
    assert disk_intersection_edges(mk([(0, 0), (Fraction(3, 4), 0)])) == {(0, 1)}
    assert disk_intersection_edges(mk([(0, 0), (Fraction(3, 2), 0)])) == set()
    chain = mk([(Fraction(3, 4) * i, 0) for i in range(7)])
    assert disk_intersection_edges(chain) == {(i, i + 1) for i in range(6)}


def test_certificates_both_sides():
    for problem, per_edge in ((HD, 7), (SD, 15)):
        emb, lay = k2_layout(problem)
        g2 = intersection_graph(lay)
        for vc in ((0,), (1,), (0, 1)):
            cert = unit_disk_forward_certificate(lay, vc)
            assert len(cert) == len(vc) + per_edge
            assert CHECKERS[problem](g2, cert)
            back = unit_disk_extract_cover(lay, cert)
            assert len(back) <= len(vc)
    with pytest.raises(ValueError):
        unit_disk_forward_certificate(k2_layout(HD)[1], ())


def test_identity_k2_and_p3():
    for problem in (HD, SD):
        for g, scale in ((K(2), 2), (K(2), 3), (P(3), 2)):
            emb = embed_orthogonal(g, scale=scale)
            lay = reduce_unit_disk(problem, emb)
            tau = solve_minimum(g, Problem.VERTEX_COVER).optimum
            gamma = solve_minimum(intersection_graph(lay), problem,
                                  deterministic=False).optimum
            assert gamma == tau + lay.offset


def test_scale_monotonicity_k2():
    # doubling the scale only moves the offset by the closed form
    emb4 = embed_orthogonal(K(2), scale=4)
    lay = reduce_unit_disk(HD, emb4)
    assert lay.offset == structural_offset(HD, [4]) == 15
    gamma = solve_minimum(intersection_graph(lay), HD, deterministic=False).optimum
    assert gamma == 1 + 15


def test_identity_through_a_corner():
    # K2 routed as an L: the bend exercises the rotated grid gadget
    bent = GridEmbedding(n=2, edges=((0, 1),), coords=((0, 0), (2, 2)),
                         paths=(((0, 0), (1, 0), (2, 0), (2, 1), (2, 2)),))
    assert validate_embedding(bent)
    for problem in (HD, SD):
        lay = reduce_unit_disk(problem, bent)
        g2 = intersection_graph(lay)
        assert set(g2.edges()) == template_edges(lay)
        gamma = solve_minimum(g2, problem, deterministic=False).optimum
        assert gamma == 1 + lay.offset


def test_identity_with_mixed_grid_lengths():
    mixed = GridEmbedding(n=3, edges=((0, 1), (1, 2)), coords=((0, 0), (2, 0), (5, 0)),
                          paths=(((0, 0), (1, 0), (2, 0)),
                                 ((2, 0), (3, 0), (4, 0), (5, 0))))
    assert validate_embedding(mixed)
    for problem, offsets in ((HD, 7 + 11), (SD, 15 + 23)):
        lay = reduce_unit_disk(problem, mixed)
        assert lay.offset == offsets
        gamma = solve_minimum(intersection_graph(lay), problem,
                              deterministic=False).optimum
        assert gamma == 1 + lay.offset


def test_bend_clearance_enforced():
    # an L-path bending right next to the endpoint cannot host gadgets
    e = GridEmbedding(
        n=2, edges=((0, 1),), coords=((0, 0), (1, 1)),
        paths=(((0, 0), (1, 0), (1, 1)),))
    assert validate_embedding(e)
    with pytest.raises(PlacementError):
        reduce_unit_disk(HD, e)


def test_embedding_file_round_trip():
    emb = embed_orthogonal(P(3), scale=2)
    text = write_embedding(emb)
    again = read_embedding(text)
    assert again.coords == emb.coords and again.paths == emb.paths
    with pytest.raises(ValueError):
        read_embedding("not a header\n")
    with pytest.raises(ValueError):
        read_embedding("hopdomlab-embedding v1\nV 0 0 0\nE 0 7 0 0 1 0\n")


def test_layout_csv_and_drawings():
    _, lay = k2_layout(HD)
    csv = write_layout_csv(lay)
    lines = csv.splitlines()
    assert lines[0] == "id,role,cx_num,cx_den,cy_num,cy_den"
    assert len(lines) == 1 + len(lay.disks)
    assert "." not in csv  # exact rationals only
    svg = layout_svg(lay)
    assert svg.startswith("<svg") and svg.count("<circle") == len(lay.disks)
    dot = layout_dot(lay)
    assert dot.startswith("graph") and "--" in dot
