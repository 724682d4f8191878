"""Shared test utilities: seeded random matrices and a partial-trace oracle.

Everything here is deliberately independent of the library internals so it
can serve as an oracle for them.
"""

import numpy as np

PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def rng_for(seed):
    return np.random.Generator(np.random.PCG64(seed))


def complex_gaussian(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_hermitian(seed, dim):
    g = complex_gaussian(rng_for(seed), (dim, dim))
    return (g + g.conj().T) / 2


def random_psd(seed, dim):
    g = complex_gaussian(rng_for(seed), (dim, dim))
    return g.conj().T @ g


def random_density(seed, dim):
    """Full-rank random density matrix: normalized G G^dagger."""
    g = complex_gaussian(rng_for(seed), (dim, dim))
    m = g @ g.conj().T
    return m / np.trace(m).real


def haar_unitary(seed, dim=2):
    """Haar-random unitary via QR with the phase fix."""
    q, r = np.linalg.qr(complex_gaussian(rng_for(seed), (dim, dim)))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q @ np.diag(phases.conj())


def reduced_single_qubit(matrix, n_qubits, keep):
    """Partial trace down to one qubit (qubit 0 = most significant bit)."""
    letters = "abcdefghijkl"
    row = list(letters[:n_qubits])
    col = list(letters[:n_qubits])
    row[keep] = "y"
    col[keep] = "z"
    sub = "".join(row) + "".join(col) + "->yz"
    return np.einsum(sub, matrix.reshape((2,) * (2 * n_qubits)))


def bloch_vector(matrix, n_qubits, qubit):
    red = reduced_single_qubit(matrix, n_qubits, qubit)
    return np.array([np.trace(red @ PAULI[a]).real for a in "xyz"])
