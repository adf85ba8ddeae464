"""A small corpus of channels used in tests and demos."""

from __future__ import annotations

from .mac import Channel, build_channel

BIN = ("0", "1")


def _deterministic(name_fn, x1=BIN, x2=BIN, y=None) -> Channel:
    rows = [(a, b, "0", name_fn(a, b)) for a in x1 for b in x2]
    outs = y if y is not None else tuple(sorted({r[3] for r in rows}))
    return build_channel(x1, x2, ("0",), outs, rows)


def binary_adder() -> Channel:
    """Noiseless Y = X1 + X2 over the integers."""
    return _deterministic(lambda a, b: str(int(a) + int(b)), y=("0", "1", "2"))


def binary_and() -> Channel:
    return _deterministic(lambda a, b: str(int(a) & int(b)), y=BIN)


def binary_xor() -> Channel:
    return _deterministic(lambda a, b: str(int(a) ^ int(b)), y=BIN)


def identity() -> Channel:
    """Y = (X1, X2) encoded as the two-character string."""
    return _deterministic(lambda a, b: a + b, y=("00", "01", "10", "11"))


def pentagon() -> Channel:
    """Single-user Y = (X + W) mod 5 with W in {0, 1}; X2 is a dummy singleton input."""
    z5 = tuple(str(i) for i in range(5))
    rows = [(a, "0", w, str((int(a) + int(w)) % 5)) for a in z5 for w in BIN]
    return build_channel(z5, ("0",), BIN, z5, rows)


def constant() -> Channel:
    """Binary inputs, a single output symbol."""
    return _deterministic(lambda a, b: "0", y=("0",))


CORPUS = {
    "adder": binary_adder,
    "and": binary_and,
    "xor": binary_xor,
    "identity": identity,
    "pentagon": pentagon,
}
