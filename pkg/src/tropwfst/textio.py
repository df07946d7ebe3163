"""Weight formatting shared by the machine and matrix text formats."""

import math


def format_weight(w: float) -> str:
    """Shortest round-trip decimal form; integers print without a dot."""
    w = float(w)
    if math.isinf(w):
        return "inf" if w > 0 else "-inf"
    if w.is_integer():
        return str(int(w))
    return repr(w)


def parse_weight(tok: str) -> float:
    w = float(tok)
    if math.isnan(w):
        raise ValueError("NaN is not a valid weight")
    return w
