"""JSON tensor files.

Format: ``{"order": m, "dim": n, "generator": [...], ...metadata}``. Floats
are written with 17 significant digits, enough to round-trip every double.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .core import HankelTensor
from .errors import DimensionError, StructureError


def _fmt(obj):
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            raise ValueError(f"cannot serialize non-finite float {x}")
        s = format(x, ".17g")
        # keep floats recognizable as floats
        return s if any(c in s for c in ".en") else s + ".0"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_fmt(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_fmt(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj):
    """``json.dumps`` with 17-significant-digit floats."""
    return _fmt(obj)


@dataclass(eq=False)
class TensorFile:
    order: int
    dim: int
    generator: np.ndarray
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_tensor(cls, T, **metadata):
        return cls(T.order, T.dim, np.array(T.generator), metadata)

    def tensor(self):
        return HankelTensor(self.order, self.dim, self.generator)

    def to_dict(self):
        d = {"order": self.order, "dim": self.dim, "generator": self.generator}
        d.update(self.metadata)
        return d

    @classmethod
    def from_dict(cls, d):
        try:
            m, n, g = int(d["order"]), int(d["dim"]), d["generator"]
        except KeyError as exc:
            raise StructureError(f"tensor file is missing field {exc.args[0]!r}") from None
        g = np.asarray(g, dtype=float)
        if g.ndim != 1 or g.size != m * (n - 1) + 1:
            raise DimensionError(
                f"generator length {g.size} does not match order {m}, dim {n}: "
                f"expected {m * (n - 1) + 1}")
        meta = {k: v for k, v in d.items() if k not in ("order", "dim", "generator")}
        return cls(m, n, g, meta)


def save(path, tf):
    if isinstance(tf, HankelTensor):
        tf = TensorFile.from_tensor(tf)
    with open(path, "w") as f:
        f.write(dumps(tf.to_dict()) + "\n")


def load(path):
    with open(path) as f:
        return TensorFile.from_dict(json.load(f))
