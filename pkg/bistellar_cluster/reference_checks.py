"""Контрольные значения и проверка сборки на встроенных триангуляциях.

Команда verify запускает все проверки и завершается с ненулевым кодом,
если хотя бы одна не прошла.
"""

import logging

from .bistellar import (
    apply_move,
    local_face_sets,
    local_frame,
    pair_at,
    reverse_frame,
)
from .cluster_algebra import (
    Monomial,
    grouped_relation_check,
    initial_seed,
    mutate_seed,
    pi_duality_check,
    presentation,
    relation_classes,
    symmetry_check_M,
)
from .complex_core import simplex
from .errors import BistellarError
from .exchange_graph import enumerate_class, pair_set
from .exchange_matrix import (
    exchange_matrix,
    exchange_matrix_of_chain,
    mutate,
)
from .fixtures import load_fixture
from .pl_invariant import build_chain_2d, single_class_check
from .semifields import make_semifield

logger = logging.getLogger(__name__)


def _faces(*labels):
    return [simplex(int(c) for c in label) for label in labels]


BOUNDARY_DELTA4_MATRIX = [
    [0, -1, 1, 1, -1, 0, -1, 1, 0, 0],
    [1, 0, -1, -1, 0, 1, 1, 0, -1, 0],
    [-1, 1, 0, 0, 1, -1, 0, -1, 1, 0],
    [-1, 1, 0, 0, 1, -1, -1, 0, 0, 1],
    [1, 0, -1, -1, 0, 1, 0, 1, 0, -1],
    [0, -1, 1, 1, -1, 0, 0, 0, -1, 1],
    [1, -1, 0, 1, 0, 0, 0, -1, 1, -1],
    [-1, 0, 1, 0, -1, 0, 1, 0, -1, 1],
    [0, 1, -1, 0, 0, 1, -1, 1, 0, -1],
    [0, 0, 0, -1, 1, -1, 1, -1, 1, 0],
]

H1_ALPHA_ORDER = _faces("12", "13", "14", "23", "24")
H1_ALPHA_MATRIX = [
    [0, 1, -1, -1, 1],
    [-1, 0, 0, 1, 0],
    [1, 0, 0, 0, -1],
    [1, -1, 0, 0, 0],
    [-1, 0, 1, 0, 0],
]

H1_BETA_ORDER = _faces("34", "13", "14", "23", "24")
H1_BETA_MATRIX = [
    [0, -1, 1, 1, -1],
    [1, 0, -1, 0, 0],
    [-1, 1, 0, 0, 0],
    [-1, 0, 0, 0, 1],
    [1, 0, 0, -1, 0],
]

H2_ALPHA_ORDER = _faces(
    "1234", "1235", "1236", "1245", "1246", "1256",
    "1345", "1346", "1356", "2345", "2346", "2356",
)
H2_ALPHA_MATRIX = [
    [0, -1, 1, 1, -1, 0, -1, 1, 0, 1, -1, 0],
    [1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1],
    [-1, 1, 0, 0, 1, -1, 0, -1, 1, 0, 1, -1],
    [-1, 1, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0],
    [1, 0, -1, 0, 0, 0, 0, 1, 0, 0, -1, 0],
    [0, -1, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1],
    [1, -1, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0],
    [-1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 1, 0],
    [0, 1, -1, 0, 0, 1, 0, 0, 0, 0, 0, -1],
    [-1, 1, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0],
    [1, 0, -1, 0, 1, 0, 0, -1, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
]

H2_BETA_ORDER = _faces(
    "1456", "2456", "3456", "1245", "1246", "1256",
    "1345", "1346", "1356", "2345", "2346", "2356",
)
H2_BETA_MATRIX = [
    [0, -1, 1, 1, -1, 1, -1, 1, -1, 0, 0, 0],
    [1, 0, -1, -1, 1, -1, 0, 0, 0, 1, -1, 1],
    [-1, 1, 0, 0, 0, 0, 1, -1, 1, -1, 1, -1],
    [-1, 1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0],
    [1, -1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0],
    [-1, 0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, 1, -1, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0, 0, 0, 0, -1, 1],
    [0, 1, -1, 0, 0, 0, 0, 0, 0, 1, 0, -1],
    [0, -1, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0],
]

# Пять классов произведений двумерной сферы на пяти вершинах
SPHERE5_PRODUCT_CLASSES = [
    [_faces("12", "45"), _faces("14", "25"), _faces("15", "24")],
    [_faces("13", "45"), _faces("14", "35"), _faces("15", "34")],
    [_faces("23", "45"), _faces("24", "35"), _faces("25", "34")],
    [_faces("12", "35"), _faces("13", "25"), _faces("15", "23")],
    [_faces("12", "34"), _faces("13", "24"), _faces("14", "23")],
]


def product_powers(faces):
    return Monomial.from_dict({face: 1 for face in faces}).powers


def _local_matrix(name, order):
    return exchange_matrix_of_chain(load_fixture(name)).reindexed(order).rows()


def check_boundary_delta4():
    return exchange_matrix(load_fixture("boundary_delta4")).rows() == BOUNDARY_DELTA4_MATRIX


def check_local_h1():
    return (
        _local_matrix("local_h1_alpha", H1_ALPHA_ORDER) == H1_ALPHA_MATRIX
        and _local_matrix("local_h1_beta", H1_BETA_ORDER) == H1_BETA_MATRIX
    )


def check_local_h2():
    return (
        _local_matrix("local_h2_alpha", H2_ALPHA_ORDER) == H2_ALPHA_MATRIX
        and _local_matrix("local_h2_beta", H2_BETA_ORDER) == H2_BETA_MATRIX
    )


def check_sphere5_orbit():
    graph = enumerate_class(load_fixture("sphere5"))
    return (
        len(graph.nodes) == 10
        and len(graph.edges) == 15
        and len(pair_set(graph)) == 30
        and set(graph.degrees()) == {3}
        and graph.is_connected()
    )


def check_boundary_delta5_orbit():
    graph = enumerate_class(load_fixture("boundary_delta5"))
    return len(graph.nodes) == 1 and not graph.edges


def _edges_with_frames(graph):
    for source, _, pair in graph.edges:
        frame = local_frame(graph.nodes[source], pair)
        yield graph.nodes[source], frame, local_face_sets(frame)


def check_mutation_oracle():
    graph = enumerate_class(load_fixture("sphere5"))
    cases = list(_edges_with_frames(graph))
    sphere4 = load_fixture("sphere4_h2")
    frame = local_frame(sphere4, simplex_pair(sphere4, "123"))
    cases.append((sphere4, frame, local_face_sets(frame)))
    for manifold, frame, sets in cases:
        moved = apply_move(manifold, frame.pair)
        if mutate(exchange_matrix(manifold), frame, sets) != exchange_matrix(moved):
            return False
    return True


def simplex_pair(manifold, alpha):
    return pair_at(manifold, [int(c) for c in alpha])


def check_sphere5_relations():
    algebra = presentation(enumerate_class(load_fixture("sphere5")))
    if len(algebra.relations) != 15 or len(algebra.generators) != 10:
        return False
    if algebra.exchangeable != algebra.generators:
        return False
    first = [r for r in algebra.relations if set(r.left) == set(_faces("12", "45"))]
    if len(first) != 1 or first[0].m_plus.powers != product_powers(_faces("14", "25")):
        return False
    return all(r.m_plus.gcd(r.m_minus).is_unit() for r in algebra.relations)


def check_grouped_relations():
    algebra = presentation(enumerate_class(load_fixture("sphere5")))
    classes = relation_classes(algebra)
    expected = {frozenset(product_powers(p) for p in group) for group in SPHERE5_PRODUCT_CLASSES}
    found = {
        frozenset(r.product.powers for r in group) for group in classes
    }
    return found == expected and all(grouped_relation_check(group) for group in classes)


def check_seed_symmetries():
    graph = enumerate_class(load_fixture("sphere5"))
    for name in ("trivial", "tropical", "posrat"):
        semifield = make_semifield(name)
        for manifold, frame, sets in _edges_with_frames(graph):
            seed = initial_seed(manifold, semifield)
            mutated = mutate_seed(seed, frame, sets)
            back = reverse_frame(frame, mutated.host)
            if not mutate_seed(mutated, back, local_face_sets(back)).equals(seed):
                return False
            if not symmetry_check_M(seed, frame, sets):
                return False
            if not pi_duality_check(seed, frame, sets):
                return False
    return True


def check_sphere_chain():
    chain = build_chain_2d(load_fixture("boundary_delta3"), 7)
    return (
        chain.generator_counts() == [6, 10, 15, 21]
        and all(e.preserves_relations() for e in chain.embeddings)
        and single_class_check(chain)
    )


REFERENCE_CHECKS = [
    ("B(∂Δ⁴)", check_boundary_delta4),
    ("B(Λ_α), B(Λ_β) при h=1", check_local_h1),
    ("B(Λ_α), B(Λ_β) при h=2", check_local_h2),
    ("класс сферы на 5 вершинах", check_sphere5_orbit),
    ("класс ∂Δ⁵", check_boundary_delta5_orbit),
    ("μ_α(B(K)) = B(bm_α K)", check_mutation_oracle),
    ("15 соотношений обмена", check_sphere5_relations),
    ("сгруппированные соотношения", check_grouped_relations),
    ("Φ_β∘Φ_α = id, симметрия M, двойственность π", check_seed_symmetries),
    ("цепочка m = 4..7", check_sphere_chain),
]


def run_reference_checks():
    """Запускает все проверки.

    Returns:
        Список кортежей (название, прошла ли, сообщение об ошибке или "").
    """
    results = []
    for name, check in REFERENCE_CHECKS:
        try:
            passed = bool(check())
            message = ""
        except BistellarError as e:
            passed, message = False, str(e)
        logger.debug("Проверка '%s': %s", name, passed)
        results.append((name, passed, message))
    return results
