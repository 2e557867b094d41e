"""
Гейты и схемы.

Текстовый формат схемы (по строке на гейт):

    QUBITS n
    GATE kind targets [theta]

где targets - номера кубитов через запятую, theta - угол в радианах
для параметризованных гейтов. Пример: GATE RZZ 0,2 0.785398

Матрицы гейтов в локальной нумерации: targets[0] - младший бит.
Для CX первым идёт управляющий кубит.
"""

from typing import List, Dict, Tuple, Optional, Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from ..core.errors import ArgumentError


# kind -> (число кубитов, есть ли угол)
GATE_SPECS: Dict[str, Tuple[int, bool]] = {
    'RZ': (1, True),
    'SX': (1, False),
    'X': (1, False),
    'H': (1, False),
    'RX': (1, True),
    'RY': (1, True),
    'RZZ': (2, True),
    'CX': (2, False),
}

NATIVE_GATES = ('RZ', 'SX', 'CX')


@dataclass(frozen=True)
class Gate:
    """
    Один гейт схемы.

    Attributes:
        kind: Вид гейта ('RZ', 'SX', 'X', 'H', 'RX', 'RY', 'RZZ', 'CX')
        targets: Кубиты, для CX - (управляющий, целевой)
        theta: Угол в радианах для параметризованных гейтов
    """
    kind: str
    targets: Tuple[int, ...]
    theta: Optional[float] = None

    def __post_init__(self):
        targets = tuple(int(q) for q in self.targets)
        object.__setattr__(self, 'targets', targets)
        if not targets:
            raise ArgumentError(f"{self.kind} gate without targets")
        if len(set(targets)) != len(targets):
            raise ArgumentError(f"{self.kind} gate has duplicate targets {targets}")
        if any(q < 0 for q in targets):
            raise ArgumentError(f"negative qubit index in {targets}")
        spec = GATE_SPECS.get(self.kind)
        if spec is None:
            # неизвестные виды допустимы в IR, их отвергает транспилятор
            return
        arity, parametric = spec
        if len(targets) != arity:
            raise ArgumentError(f"{self.kind} acts on {arity} qubits, got {targets}")
        if parametric:
            if self.theta is None or not np.isfinite(self.theta):
                raise ArgumentError(f"{self.kind} needs a finite angle, got {self.theta}")
            object.__setattr__(self, 'theta', float(self.theta))
        elif self.theta is not None:
            raise ArgumentError(f"{self.kind} takes no angle")

    @property
    def is_native(self) -> bool:
        return self.kind in NATIVE_GATES

    def __str__(self) -> str:
        targets = ','.join(str(q) for q in self.targets)
        if self.theta is None:
            return f"GATE {self.kind} {targets}"
        return f"GATE {self.kind} {targets} {self.theta:.12g}"


@dataclass
class Circuit:
    """
    Упорядоченный список гейтов на n кубитах.

    Attributes:
        n: Число кубитов
        gates: Гейты в порядке применения
    """
    n: int
    gates: List[Gate] = field(default_factory=list)

    def __post_init__(self):
        if self.n < 1:
            raise ArgumentError(f"circuit needs at least one qubit, got {self.n}")
        for gate in self.gates:
            self._check(gate)

    def _check(self, gate: Gate) -> None:
        if any(q >= self.n for q in gate.targets):
            raise ArgumentError(f"{gate} addresses a qubit outside 0..{self.n - 1}")

    def add(self, kind: str, targets: Sequence[int], theta: Optional[float] = None) -> 'Circuit':
        """Добавить гейт в конец, возвращает саму схему."""
        gate = Gate(kind, tuple(targets), theta)
        self._check(gate)
        self.gates.append(gate)
        return self

    def extend(self, gates: Sequence[Gate]) -> 'Circuit':
        for gate in gates:
            self._check(gate)
            self.gates.append(gate)
        return self

    def count(self, kind: str) -> int:
        return sum(1 for g in self.gates if g.kind == kind)

    def is_native(self) -> bool:
        return all(g.is_native for g in self.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __str__(self) -> str:
        kinds: Dict[str, int] = {}
        for g in self.gates:
            kinds[g.kind] = kinds.get(g.kind, 0) + 1
        summary = ', '.join(f"{k}×{v}" for k, v in sorted(kinds.items()))
        return f"Circuit(n={self.n}, {len(self.gates)} gates: {summary})"


def gate_matrix(gate: Gate) -> np.ndarray:
    """
    Унитарная матрица гейта в локальной нумерации (targets[0] - младший бит).

    Raises:
        ArgumentError: неизвестный вид гейта
    """
    kind, theta = gate.kind, gate.theta
    if kind == 'RZ':
        return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])
    if kind == 'SX':
        return 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])
    if kind == 'X':
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if kind == 'H':
        return np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
    if kind == 'RX':
        c, s = np.cos(theta / 2), np.sin(theta / 2)
        return np.array([[c, -1j * s], [-1j * s, c]])
    if kind == 'RY':
        c, s = np.cos(theta / 2), np.sin(theta / 2)
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind == 'RZZ':
        a, b = np.exp(-0.5j * theta), np.exp(0.5j * theta)
        return np.diag([a, b, b, a])
    if kind == 'CX':
        return np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex)
    raise ArgumentError(f"no matrix for gate kind '{kind}'")


def parse_gate(line: str) -> Gate:
    """
    Разобрать строку вида 'GATE kind targets [theta]'.

    Args:
        line: Строка гейта, например "GATE RX 3 1.5708"

    Returns:
        Gate
    """
    parts = line.split()
    if len(parts) not in (3, 4) or parts[0] != 'GATE':
        raise ArgumentError(f"Invalid gate line: {line!r}")
    try:
        targets = tuple(int(q) for q in parts[2].split(','))
        theta = float(parts[3]) if len(parts) == 4 else None
    except ValueError:
        raise ArgumentError(f"Invalid gate line: {line!r}") from None
    return Gate(parts[1], targets, theta)


def parse_circuit(text: str) -> Circuit:
    """
    Разобрать схему из текстового формата.

    Пустые строки и строки, начинающиеся с '#', пропускаются.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith('#')]
    if not lines or not lines[0].startswith('QUBITS'):
        raise ArgumentError("circuit text must start with 'QUBITS n'")
    header = lines[0].split()
    if len(header) != 2 or not header[1].isdigit():
        raise ArgumentError(f"Invalid header: {lines[0]!r}")
    circuit = Circuit(int(header[1]))
    circuit.extend([parse_gate(ln) for ln in lines[1:]])
    return circuit


def dump_circuit(circuit: Circuit) -> str:
    """Схема в текстовом формате."""
    return '\n'.join([f"QUBITS {circuit.n}"] + [str(g) for g in circuit.gates]) + '\n'
