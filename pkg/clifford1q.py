"""
Single-qubit Clifford group modulo global phase

The 24 classes are generated breadth-first from H and S over exact 2x2
matrices. Each class keeps the first matrix reached as its representative,
and every product is reported as a class plus the ω-power relating it to
that representative.
"""

from collections import deque
from typing import Dict, List, NamedTuple, Tuple

from coeff import INV_SQRT2, ONE, ZERO, CycCoeff, I

Matrix = Tuple[CycCoeff, CycCoeff, CycCoeff, CycCoeff]
PAULIS = ("X", "Y", "Z")


class CliffordTableError(RuntimeError):
    """Raised when the generated tables fail to close or self-check"""


class PhasedClass(NamedTuple):
    """ω^phase_exp times the representative of class_id"""

    class_id: int
    phase_exp: int


def mat_mul(m: Matrix, n: Matrix) -> Matrix:
    return (
        m[0] * n[0] + m[1] * n[2],
        m[0] * n[1] + m[1] * n[3],
        m[2] * n[0] + m[3] * n[2],
        m[2] * n[1] + m[3] * n[3],
    )


def mat_dagger(m: Matrix) -> Matrix:
    return (m[0].conjugate(), m[2].conjugate(), m[1].conjugate(), m[3].conjugate())


def mat_scale_omega(m: Matrix, k: int) -> Matrix:
    return tuple(x.mul_omega(k) for x in m)


def mat_neg(m: Matrix) -> Matrix:
    return tuple(-x for x in m)


def _key(m: Matrix) -> Tuple:
    return tuple(x.as_tuple() for x in m)


IDENTITY: Matrix = (ONE, ZERO, ZERO, ONE)
H_MATRIX: Matrix = (INV_SQRT2, INV_SQRT2, INV_SQRT2, -INV_SQRT2)
S_MATRIX: Matrix = (ONE, ZERO, ZERO, I)
SDG_MATRIX: Matrix = (ONE, ZERO, ZERO, -I)
X_MATRIX: Matrix = (ZERO, ONE, ONE, ZERO)
Y_MATRIX: Matrix = (ZERO, -I, I, ZERO)
Z_MATRIX: Matrix = (ONE, ZERO, ZERO, -ONE)
# e^{iπX/4}, the vertex factor of a local complementation
LC_CENTER_MATRIX: Matrix = (INV_SQRT2, INV_SQRT2 * I, INV_SQRT2 * I, INV_SQRT2)

PAULI_MATRICES: Dict[str, Matrix] = {
    "I": IDENTITY,
    "X": X_MATRIX,
    "Y": Y_MATRIX,
    "Z": Z_MATRIX,
}

GENERATORS: Tuple[Tuple[str, Matrix], ...] = (("H", H_MATRIX), ("S", S_MATRIX))


class CliffordTables:
    """Generated composition, inverse and Pauli-conjugation tables"""

    def __init__(self):
        self.reps: List[Matrix] = []
        self.words: List[str] = []
        self._lookup: Dict[Tuple, PhasedClass] = {}
        self._generate()
        self.mul: List[List[PhasedClass]] = [
            [self.classify(mat_mul(self.reps[a], self.reps[b])) for b in range(24)]
            for a in range(24)
        ]
        self.conj: List[Dict[str, Tuple[str, int]]] = [
            {p: self._conjugate(c, p) for p in PAULIS} for c in range(24)
        ]
        self.inv: List[PhasedClass] = [self._inverse(c) for c in range(24)]
        self.pullback: List[Dict[str, Tuple[str, int]]] = [
            self.conj[self.inv[c].class_id] for c in range(24)
        ]
        self.pauli_of_class: Dict[int, Tuple[str, int]] = {}
        for letter, matrix in PAULI_MATRICES.items():
            cls, phase = self.classify(matrix)
            self.pauli_of_class[cls] = (letter, (-phase) % 8)
        self.diagonal_classes = frozenset(
            c for c, m in enumerate(self.reps) if m[1].is_zero() and m[2].is_zero()
        )
        self.word_to_class = {w: c for c, w in enumerate(self.words)}
        self._self_check()

    def _generate(self):
        queue = deque([("", IDENTITY)])
        self._register("", IDENTITY)
        while queue:
            word, matrix = queue.popleft()
            for letter, gen in GENERATORS:
                product = mat_mul(matrix, gen)
                if _key(product) in self._lookup:
                    continue
                self._register(word + letter, product)
                queue.append((word + letter, product))
        if len(self.reps) != 24:
            raise CliffordTableError(f"generation reached {len(self.reps)} classes, expected 24")

    def _register(self, word: str, matrix: Matrix):
        class_id = len(self.reps)
        self.reps.append(matrix)
        self.words.append(word)
        for k in range(8):
            self._lookup[_key(mat_scale_omega(matrix, k))] = PhasedClass(class_id, k)

    def classify(self, matrix: Matrix) -> PhasedClass:
        """Class and ω-power with matrix == ω^phase · representative"""
        found = self._lookup.get(_key(matrix))
        if found is None:
            raise CliffordTableError(f"matrix is not a Clifford up to an ω-power: {matrix}")
        return found

    def _conjugate(self, c: int, pauli: str) -> Tuple[str, int]:
        rep = self.reps[c]
        image = mat_mul(mat_mul(rep, PAULI_MATRICES[pauli]), mat_dagger(rep))
        for letter in PAULIS:
            target = PAULI_MATRICES[letter]
            if _key(image) == _key(target):
                return (letter, 1)
            if _key(image) == _key(mat_neg(target)):
                return (letter, -1)
        raise CliffordTableError(f"class {c} maps {pauli} outside ±Paulis")

    def _inverse(self, c: int) -> PhasedClass:
        for d in range(24):
            cls, phase = self.mul[c][d]
            if cls == 0:
                return PhasedClass(d, (-phase) % 8)
        raise CliffordTableError(f"class {c} has no inverse")

    def _self_check(self):
        if self.words[0] != "" or self.classify(IDENTITY) != PhasedClass(0, 0):
            raise CliffordTableError("class 0 is not the identity")
        for c in range(24):
            d, phase = self.inv[c]
            cls, q = self.mul[c][d]
            if cls != 0 or (q + phase) % 8 != 0:
                raise CliffordTableError(f"inverse of class {c} does not compose to identity")
        if len(self.diagonal_classes) != 4:
            raise CliffordTableError("expected four diagonal classes")

    def matrix(self, pc: PhasedClass) -> Matrix:
        return mat_scale_omega(self.reps[pc.class_id], pc.phase_exp)

    def compose(self, left: PhasedClass, right: PhasedClass) -> PhasedClass:
        cls, phase = self.mul[left.class_id][right.class_id]
        return PhasedClass(cls, (phase + left.phase_exp + right.phase_exp) % 8)


TABLES = CliffordTables()

MUL = TABLES.mul
CONJ = TABLES.conj
INV = TABLES.inv
PULLBACK = TABLES.pullback
PAULI_OF_CLASS = TABLES.pauli_of_class
DIAGONAL_CLASSES = TABLES.diagonal_classes
WORDS = TABLES.words
REPS = TABLES.reps

IDENTITY_CLASS = 0

GATE_CLASS: Dict[str, PhasedClass] = {
    "I": TABLES.classify(IDENTITY),
    "H": TABLES.classify(H_MATRIX),
    "S": TABLES.classify(S_MATRIX),
    "SDG": TABLES.classify(SDG_MATRIX),
    "X": TABLES.classify(X_MATRIX),
    "Y": TABLES.classify(Y_MATRIX),
    "Z": TABLES.classify(Z_MATRIX),
}
LC_CENTER = TABLES.classify(LC_CENTER_MATRIX)
H_CLASS = GATE_CLASS["H"].class_id
PAULI_CLASS: Dict[str, PhasedClass] = {p: GATE_CLASS[p] for p in ("I", "X", "Y", "Z")}


MulTable = List[List[PhasedClass]]
ConjTable = List[Dict[str, Tuple[str, int]]]


def build_tables() -> Tuple[MulTable, ConjTable, List[PhasedClass]]:
    """Fresh (MUL, CONJ, INV) tables"""
    tables = CliffordTables()
    return tables.mul, tables.conj, tables.inv


def conjugate_pauli(c: int, p: str) -> Tuple[str, int]:
    """c·p·c† = sign·P′"""
    return CONJ[c][p]


def class_from_word(word: str) -> int:
    """Class of a generator word; words need not be canonical"""
    try:
        return TABLES.word_to_class[word]
    except KeyError:
        pass
    matrix = IDENTITY
    for letter in word:
        if letter == "H":
            matrix = mat_mul(matrix, H_MATRIX)
        elif letter == "S":
            matrix = mat_mul(matrix, S_MATRIX)
        else:
            raise ValueError(f"unknown generator {letter!r} in word {word!r}")
    return TABLES.classify(matrix).class_id
