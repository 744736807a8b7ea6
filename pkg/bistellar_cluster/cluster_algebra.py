"""Модуль бистеллярных кластерных алгебр.

Затравки (кластер, нормированные коэффициенты, матрица обмена),
соотношения обмена, мутация затравок Φ_α, отображения полей и
представление алгебры класса образующими и соотношениями.
"""

import logging
from collections import deque
from dataclasses import dataclass, field

import sympy as sp

from .bistellar import (
    apply_move,
    local_face_sets,
    local_frame,
    reverse_frame,
)
from .complex_core import face_label, format_face
from .errors import (
    AlgebraError,
    DivisorMismatch,
    NonDivisible,
    NotMiddleMove,
)
from .exchange_matrix import exchange_matrix, mutate
from .semifields import TrivialSemifield, normalize

logger = logging.getLogger(__name__)


def variable_name(face):
    return f"x_{face_label(face)}"


def variable_symbol(face):
    """Символ sympy кластерной переменной x_f."""
    return sp.Symbol(variable_name(face), positive=True)


@dataclass(frozen=True)
class Monomial:
    """Моном от кластерных переменных.

    powers — кортеж пар (грань, показатель) по возрастанию граней без
    нулевых показателей; coefficient — элемент полуполя (None означает 1).
    """

    powers: tuple = ()
    coefficient: object = None

    @classmethod
    def from_dict(cls, exponents, coefficient=None):
        powers = tuple(sorted((tuple(f), e) for f, e in exponents.items() if e != 0))
        for face, exponent in powers:
            if exponent < 0:
                raise AlgebraError(f"Отрицательный показатель у {format_face(face)}")
        return cls(powers, coefficient)

    def as_dict(self):
        return dict(self.powers)

    def stripped(self):
        return Monomial(self.powers)

    def with_coefficient(self, coefficient):
        return Monomial(self.powers, coefficient)

    @property
    def degree(self):
        return sum(e for _, e in self.powers)

    def is_unit(self):
        return not self.powers

    def multiply(self, other):
        total = self.as_dict()
        for face, exponent in other.powers:
            total[face] = total.get(face, 0) + exponent
        return Monomial.from_dict(total)

    def divide(self, other):
        own = self.as_dict()
        for face, exponent in other.powers:
            if own.get(face, 0) < exponent:
                raise NonDivisible(
                    f"Моном {self.render()} не делится на {other.render()}"
                )
            own[face] -= exponent
        return Monomial.from_dict(own, self.coefficient)

    def lcm(self, other):
        own, theirs = self.as_dict(), other.as_dict()
        return Monomial.from_dict(
            {f: max(own.get(f, 0), theirs.get(f, 0)) for f in set(own) | set(theirs)}
        )

    def gcd(self, other):
        own, theirs = self.as_dict(), other.as_dict()
        return Monomial.from_dict(
            {f: min(own[f], theirs[f]) for f in set(own) & set(theirs)}
        )

    def to_sympy(self, semifield=None):
        result = sp.Integer(1)
        if self.coefficient is not None and semifield is not None:
            result = semifield.to_sympy(self.coefficient)
        for face, exponent in self.powers:
            result *= variable_symbol(face) ** exponent
        return result

    def render(self):
        if not self.powers:
            return "1"
        parts = []
        for face, exponent in self.powers:
            name = "x" + format_face(face)
            parts.append(name if exponent == 1 else f"{name}^{exponent}")
        return "*".join(parts)


@dataclass(frozen=True)
class CoefficientPair:
    p_plus: object
    p_minus: object


class Seed:
    """Затравка Σ_K = (𝒳(K), 𝐩_K, B(K)).

    Args:
        host: TriangulatedManifold.
        cluster: Словарь грань -> имя переменной.
        coefficients: Словарь грань -> CoefficientPair.
        matrix: ExchangeMatrix с индексом ℱ(K).
        semifield: Полуполе коэффициентов.
    """

    def __init__(self, host, cluster, coefficients, matrix, semifield):
        self.host = host
        self.cluster = dict(cluster)
        self.coefficients = dict(coefficients)
        self.matrix = matrix
        self.semifield = semifield
        keys = sorted(self.cluster)
        if keys != list(matrix.index) or sorted(self.coefficients) != keys:
            raise AlgebraError("Ключи кластера, коэффициентов и матрицы не совпадают")

    def ratio(self, face):
        """u_f = p⁺ / p⁻."""
        pair = self.coefficients[face]
        return self.semifield.divide(pair.p_plus, pair.p_minus)

    def equals(self, other):
        if self.host != other.host or self.cluster != other.cluster:
            return False
        if self.matrix != other.matrix:
            return False
        for face, pair in self.coefficients.items():
            theirs = other.coefficients.get(face)
            if theirs is None:
                return False
            if not (
                self.semifield.equal(pair.p_plus, theirs.p_plus)
                and self.semifield.equal(pair.p_minus, theirs.p_minus)
            ):
                return False
        return True


def initial_seed(manifold, semifield=None, coefficient_assignment=None):
    """Начальная затравка комплекса.

    Args:
        manifold: TriangulatedManifold.
        semifield: Полуполе; по умолчанию тривиальное.
        coefficient_assignment: Словарь грань -> u_f; для отсутствующих
            граней берётся образующая полуполя.
    """
    semifield = semifield or TrivialSemifield()
    assignment = coefficient_assignment or {}
    matrix = exchange_matrix(manifold)
    coefficients = {}
    for face in matrix.index:
        ratio = assignment.get(face)
        if ratio is None:
            ratio = semifield.generator(face)
        coefficients[face] = CoefficientPair(*normalize(semifield, ratio))
    cluster = {face: variable_name(face) for face in matrix.index}
    return Seed(manifold, cluster, coefficients, matrix, semifield)


@dataclass(frozen=True)
class ExchangeRelation:
    """x_f x_{σ(f)} = m⁺ + m⁻; коэффициенты p± хранятся в мономах."""

    left: tuple
    m_plus: Monomial
    m_minus: Monomial
    divisor: Monomial = field(default_factory=Monomial)

    @property
    def product(self):
        return Monomial.from_dict({face: 1 for face in self.left})

    def key(self):
        """Ключ без коэффициентов: левое произведение и неупорядоченная пара мономов."""
        return (
            tuple(sorted(self.left)),
            tuple(sorted([self.m_plus.powers, self.m_minus.powers])),
        )

    def swapped(self):
        return ExchangeRelation(self.left, self.m_minus, self.m_plus, self.divisor)

    def to_sympy(self, semifield):
        lhs = self.product.to_sympy()
        rhs = self.m_plus.to_sympy(semifield) + self.m_minus.to_sympy(semifield)
        return sp.Eq(lhs, rhs)

    def render(self, semifield=None):
        def term(monomial):
            if semifield is None or isinstance(semifield, TrivialSemifield):
                return monomial.render()
            return f"[{semifield.render(monomial.coefficient)}]*{monomial.render()}"

        return f"{self.product.render()} = {term(self.m_plus)} + {term(self.m_minus)}"


def _require_middle(frame):
    if frame.dimension != 2 * frame.move_type:
        raise NotMiddleMove(
            f"Ход типа {frame.move_type} на {frame.dimension}-многообразии не средний"
        )


def exchange_relations(seed, frame, sets):
    """Соотношения обмена для всех f ∈ D_α.

    m± = p±_f · lcm(Π x_g^{[±b_fg]+}, Π x_{σ(g)}^{[±b_fg]+}) / D,
    где g пробегает E = ℱ(Λ_α)∖D_α. Обе формы делителя D вычисляются и
    сравниваются.
    """
    _require_middle(frame)
    matrix = seed.matrix
    common = sets.common
    relations = []
    for f in sets.d_alpha:
        plus_own, plus_image, minus_own, minus_image = {}, {}, {}, {}
        divisor_positive, divisor_negative = {}, {}
        for g in common:
            image = frame.sigma_face(g)
            b = matrix.entry(f, g)
            b_image = matrix.entry(f, image)
            if b > 0:
                plus_own[g] = plus_own.get(g, 0) + b
                plus_image[image] = plus_image.get(image, 0) + b
            elif b < 0:
                minus_own[g] = minus_own.get(g, 0) - b
                minus_image[image] = minus_image.get(image, 0) - b
            if b > 0 and b_image < 0:
                for face in (g, image):
                    divisor_positive[face] = divisor_positive.get(face, 0) + b
            if b < 0 and b_image > 0:
                for face in (g, image):
                    divisor_negative[face] = divisor_negative.get(face, 0) - b
        divisor = Monomial.from_dict(divisor_positive)
        if divisor != Monomial.from_dict(divisor_negative):
            raise DivisorMismatch(
                f"Две формы делителя для {format_face(f)} не совпадают"
            )
        coefficients = seed.coefficients[f]
        m_plus = (
            Monomial.from_dict(plus_own)
            .lcm(Monomial.from_dict(plus_image))
            .divide(divisor)
            .with_coefficient(coefficients.p_plus)
        )
        m_minus = (
            Monomial.from_dict(minus_own)
            .lcm(Monomial.from_dict(minus_image))
            .divide(divisor)
            .with_coefficient(coefficients.p_minus)
        )
        if not m_plus.gcd(m_minus).is_unit():
            raise AlgebraError(
                f"Мономы соотношения для {format_face(f)} имеют общий делитель"
            )
        relations.append(
            ExchangeRelation((f, frame.sigma_face(f)), m_plus, m_minus, divisor)
        )
    return relations


def pi_coefficient(seed, frame, sets, face):
    """π_{α,g} = Π_{g'∈D_α} (p⁺_{g'})^{[b_{g'g}]+} (p⁻_{g'})^{-[-b_{g'g}]+}."""
    semifield = seed.semifield
    result = semifield.one()
    for other in sets.d_alpha:
        b = seed.matrix.entry(other, face)
        pair = seed.coefficients[other]
        if b > 0:
            result = semifield.multiply(result, semifield.power(pair.p_plus, b))
        elif b < 0:
            result = semifield.multiply(result, semifield.power(pair.p_minus, b))
    return result


def cluster_map(frame, sets, faces):
    """φ_α: x_f -> x_{σ(f)} на ℱ(Λ_α) ∪ ℱ(Λ_β), тождественно на остальных гранях."""
    local = set(sets.lambda_alpha_faces) | set(sets.lambda_beta_faces)
    return {f: frame.sigma_face(f) if f in local else f for f in faces}


def mutate_seed(seed, frame, sets):
    """Мутация затравки Φ_α.

    Коэффициенты: для f ∈ D_β пара p± меняется местами с парой σ(f);
    для f ∈ ℱ(Λ_β)∖D_β u_f = π_{α,σ(f)} u_{σ(f)}; остальные не меняются.
    """
    _require_middle(frame)
    semifield = seed.semifield
    matrix = mutate(seed.matrix, frame, sets)
    host = apply_move(seed.host, frame.pair)
    d_beta = set(sets.d_beta)
    common = set(sets.common)
    relabel = cluster_map(frame, sets, matrix.index)
    coefficients = {}
    for face in matrix.index:
        source = relabel[face]
        if face in d_beta:
            old = seed.coefficients[source]
            coefficients[face] = CoefficientPair(old.p_minus, old.p_plus)
        elif face in common:
            ratio = semifield.multiply(
                pi_coefficient(seed, frame, sets, source), seed.ratio(source)
            )
            coefficients[face] = CoefficientPair(*normalize(semifield, ratio))
        else:
            coefficients[face] = seed.coefficients[face]
    cluster = {face: variable_name(face) for face in matrix.index}
    return Seed(host, cluster, coefficients, matrix, semifield)


def field_map(seed, frame, sets):
    """Выражает переменные затравки после хода через переменные 𝒳(K).

    Для g ∈ D_β: x_g = (m⁺ + m⁻) / x_{σ(g)}; для g ∈ ℱ(Λ_β)∖D_β
    x_g = x_{σ(g)}; грани вне звезды хода переходят в себя.

    Returns:
        Словарь грань -> выражение sympy.
    """
    semifield = seed.semifield
    relations = {r.left[1]: r for r in exchange_relations(seed, frame, sets)}
    faces = (set(seed.matrix.index) - set(sets.d_alpha)) | set(sets.d_beta)
    relabel = cluster_map(frame, sets, faces)
    result = {}
    for face in sorted(faces):
        relation = relations.get(face)
        if relation is None:
            result[face] = variable_symbol(relabel[face])
        else:
            numerator = relation.m_plus.to_sympy(semifield) + relation.m_minus.to_sympy(semifield)
            result[face] = numerator / variable_symbol(relabel[face])
    return result


def compose_substitutions(outer, inner):
    """Подставляет inner в выражения outer.

    Args:
        outer: Словарь грань -> выражение от переменных промежуточного кластера.
        inner: Словарь грань промежуточного кластера -> выражение.

    Returns:
        Словарь грань -> сокращённое выражение.
    """
    replacements = {variable_symbol(face): expr for face, expr in inner.items()}
    return {
        face: sp.cancel(sp.sympify(expr).xreplace(replacements))
        for face, expr in outer.items()
    }


def _coefficients_equal(semifield, first, second):
    if first is None or second is None:
        return first is second
    return semifield.equal(first, second)


def symmetry_check_M(seed, frame, sets):
    """Проверяет M±_{K,α,f} = M∓_{L,β,σ(f)} и D_{L,β,σ(f)} = D_{K,α,f}."""
    mutated = mutate_seed(seed, frame, sets)
    back = reverse_frame(frame, mutated.host)
    back_sets = local_face_sets(back)
    forward = exchange_relations(seed, frame, sets)
    backward = {r.left[0]: r for r in exchange_relations(mutated, back, back_sets)}
    semifield = seed.semifield
    for relation in forward:
        other = backward.get(frame.sigma_face(relation.left[0]))
        if other is None:
            return False
        if other.m_plus.powers != relation.m_minus.powers:
            return False
        if other.m_minus.powers != relation.m_plus.powers:
            return False
        if not _coefficients_equal(semifield, other.m_plus.coefficient, relation.m_minus.coefficient):
            return False
        if not _coefficients_equal(semifield, other.m_minus.coefficient, relation.m_plus.coefficient):
            return False
        if other.divisor != relation.divisor:
            return False
    return True


def pi_duality_check(seed, frame, sets):
    """Проверяет π^K_{α,σ(f)} · π^L_{β,f} = 1 для f ∈ ℱ(Λ_β)∖D_β."""
    mutated = mutate_seed(seed, frame, sets)
    back = reverse_frame(frame, mutated.host)
    back_sets = local_face_sets(back)
    semifield = seed.semifield
    for face in back_sets.common:
        product = semifield.multiply(
            pi_coefficient(seed, frame, sets, frame.sigma_face(face)),
            pi_coefficient(mutated, back, back_sets, face),
        )
        if not semifield.equal(product, semifield.one()):
            return False
    return True


@dataclass
class Presentation:
    """Образующие и соотношения алгебры класса."""

    generators: tuple
    exchangeable: tuple
    relations: tuple
    semifield: object
    conflicts: tuple = ()

    def relation_keys(self):
        return {r.key() for r in self.relations}


def _transport_seeds(graph, semifield, coefficient_assignment):
    seeds = {0: initial_seed(graph.nodes[0], semifield, coefficient_assignment)}
    incident = {i: [] for i in range(len(graph.nodes))}
    for source, target, pair in graph.edges:
        incident[source].append((target, pair))
        incident[target].append((source, pair.inverse()))
    queue = deque([0])
    while queue:
        current = queue.popleft()
        for neighbour, pair in sorted(incident[current]):
            if neighbour in seeds:
                continue
            frame = local_frame(seeds[current].host, pair)
            seeds[neighbour] = mutate_seed(seeds[current], frame, local_face_sets(frame))
            queue.append(neighbour)
    return seeds


def presentation(graph, semifield=None, coefficient_assignment=None):
    """Образующие 𝒳_[K], множество обмениваемых переменных и соотношения класса.

    Затравки переносятся от первого узла по дереву обхода в ширину,
    соотношения собираются со всех рёбер и дедуплицируются по ключу без
    коэффициентов.

    Args:
        graph: ExchangeGraph.
        semifield: Полуполе коэффициентов (по умолчанию тривиальное).
        coefficient_assignment: Значения u_f для начальной затравки.

    Returns:
        Presentation.
    """
    semifield = semifield or TrivialSemifield()
    generators = set()
    for node in graph.nodes:
        generators.update(node.ridges())
    if not graph.edges:
        return Presentation(tuple(sorted(generators)), (), (), semifield)

    seeds = _transport_seeds(graph, semifield, coefficient_assignment)
    exchangeable = set()
    collected = {}
    conflicts = []
    for source, _, pair in graph.edges:
        frame = local_frame(seeds[source].host, pair)
        sets = local_face_sets(frame)
        exchangeable.update(sets.d_alpha)
        exchangeable.update(sets.d_beta)
        for relation in exchange_relations(seeds[source], frame, sets):
            key = relation.key()
            known = collected.get(key)
            if known is None:
                collected[key] = relation
                continue
            aligned = relation if known.m_plus.powers == relation.m_plus.powers else relation.swapped()
            if not (
                _coefficients_equal(semifield, known.m_plus.coefficient, aligned.m_plus.coefficient)
                and _coefficients_equal(semifield, known.m_minus.coefficient, aligned.m_minus.coefficient)
            ):
                logger.warning(
                    "Коэффициенты повторного соотношения не совпадают: %s", known.render()
                )
                conflicts.append((known, relation))
    relations = tuple(collected[key] for key in sorted(collected))
    return Presentation(
        generators=tuple(sorted(generators)),
        exchangeable=tuple(sorted(exchangeable)),
        relations=relations,
        semifield=semifield,
        conflicts=tuple(conflicts),
    )


def relation_classes(relations):
    """Группирует соотношения по тройкам произведений {левое, m⁺, m⁻}.

    Args:
        relations: Presentation или список ExchangeRelation.
    """
    relations = getattr(relations, "relations", relations)
    groups = {}
    for relation in relations:
        members = frozenset(
            [relation.product.powers, relation.m_plus.powers, relation.m_minus.powers]
        )
        groups.setdefault(members, []).append(relation)
    return [groups[k] for k in sorted(groups, key=lambda m: sorted(m))]


def grouped_relation_derivation(relations, weights=None):
    """Исключение из трёх соотношений одного класса произведений.

    Каждому соотношению сопоставляется своя независимая образующая
    (u, v, w) и коэффициенты r/(1+r), 1/(1+r); у второго и третьего
    соотношения вес r/(1+r) стоит при произведении первого. Подстановка
    второго соотношения в первое даёт (1+u+v)·P_1 = (1+u+v)·P_3, откуда
    P_1 = P_3; аналогично с третьим соотношением.

    Второй сокращаемый множитель при независимых u, v, w равен 1+u+uw,
    а не 1+u+v: форма 1⊕u⊕v получается только при отождествлении v = uw.

    При таких весах каждое соотношение нормировано (сумма весов равна 1),
    и исключение сходится тождественно. Разность остатков равна
    (1 - a - c) + a(1 - b - d), поэтому явные веса weights, нарушающие
    нормировку, исключение отвергает.

    Args:
        relations: Три соотношения класса.
        weights: Необязательный словарь произведение -> {моном: вес},
            заменяющий веса по умолчанию у соответствующих соотношений.

    Returns:
        Словарь с ключами closed (bool), factors (список числителей
        сокращаемых множителей) и symbols (u, v, w).
    """
    u, v, w = sp.symbols("u v w", positive=True)
    result = {"closed": False, "factors": [], "symbols": (u, v, w)}
    if len(relations) != 3:
        return result
    products = [r.product.powers for r in relations]
    if len(set(products)) != 3:
        return result
    for relation in relations:
        others = set(products) - {relation.product.powers}
        if {relation.m_plus.powers, relation.m_minus.powers} != others:
            return result

    lead = relations[0]
    target = lead.product.powers
    ratios = {target: u, lead.m_plus.powers: v, lead.m_minus.powers: w}
    overrides = weights or {}

    def coefficients(relation):
        product = relation.product.powers
        if product in overrides:
            return dict(overrides[product])
        ratio = ratios[product]
        plus, minus = relation.m_plus.powers, relation.m_minus.powers
        if product != target and minus == target:
            plus, minus = minus, plus
        return {plus: ratio / (1 + ratio), minus: 1 / (1 + ratio)}

    outer = coefficients(lead)
    by_left = {r.product.powers: coefficients(r) for r in relations[1:]}
    closed = True
    for substituted, remaining in (
        (lead.m_plus.powers, lead.m_minus.powers),
        (lead.m_minus.powers, lead.m_plus.powers),
    ):
        inner = by_left[substituted]
        own = sp.together(1 - outer[substituted] * inner[target])
        other = sp.together(outer[remaining] + outer[substituted] * inner[remaining])
        if sp.simplify(own - other) != 0:
            closed = False
        result["factors"].append(sp.expand(sp.fraction(sp.cancel(own))[0]))
    result["closed"] = closed
    return result


def grouped_relation_check(relations):
    """True, если три соотношения класса дают равенство всех трёх произведений."""
    return grouped_relation_derivation(relations)["closed"]
