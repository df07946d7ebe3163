"""Viterbi decoding in min-plus matrix form, beam pruning, and the
per-step polytope metrics (normalized volume and normalized entropy).
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyTrellisError, ParseError, UnknownSymbolError
from .semiring import INF, as_trop, maxplus_mul, minplus_mul
from .textio import parse_weight
from .wfst import Wfst, build_matrices


@dataclass
class ObservationModel:
    """Per-symbol emission cost vectors, one entry per machine state."""

    n_states: int
    costs: dict[str, np.ndarray]

    def __post_init__(self):
        self.costs = {s: as_trop(c) for s, c in self.costs.items()}
        for sym, c in self.costs.items():
            if c.shape != (self.n_states,):
                raise ValueError(f"cost vector for {sym!r} has wrong dimension")

    def cost(self, sym: str) -> np.ndarray:
        try:
            return self.costs[sym]
        except KeyError:
            raise UnknownSymbolError(sym) from None


@dataclass
class PruneReport:
    """Pruning decision and polytope metrics for one trellis step."""

    eta: float
    ybar: np.ndarray
    support: np.ndarray  # surviving state indices, ascending
    r: np.ndarray        # slack eta - z_i over the support
    nu: float | None = None
    entropy: float | None = None
    degenerate: bool = False
    step: int = 0


def viterbi_step(x_prev: np.ndarray, a: np.ndarray, p_sigma: np.ndarray) -> np.ndarray:
    """One trellis update: x[i] = p_sigma[i] + min_j (a[j, i] + x_prev[j])."""
    x_prev, p_sigma = as_trop(x_prev), as_trop(p_sigma)
    n = a.shape[0]
    if a.shape != (n, n) or x_prev.shape != (n,) or p_sigma.shape != (n,):
        raise ValueError("dimension mismatch in trellis update")
    return p_sigma + minplus_mul(a.T, x_prev[:, None])[:, 0]


def _step_with_backpointers(x_prev, a, p_sigma):
    sums = a + x_prev[:, None]
    best = sums.min(axis=0)
    bp = sums.argmin(axis=0)
    x = p_sigma + best
    bp = np.where(np.isfinite(x), bp, -1)
    return x, bp


def _backtrace(backpointers, last):
    path = [last]
    for bp in reversed(backpointers):
        path.append(int(bp[path[-1]]))
    path.reverse()
    return path


def viterbi_decode(m: Wfst, obs: ObservationModel, sequence: list[str]):
    """Exact best-path decode; returns (cost, state path).

    The path minimizes lam + emissions + transitions + rho; ties are
    broken toward the smallest state index. An empty sequence yields
    the cheapest single accepting state.
    """
    a = build_matrices(m).A
    if not sequence:
        cost = float(np.min(m.lam + m.rho))
        return cost, ([int(np.argmin(m.lam + m.rho))] if math.isfinite(cost) else [])
    x = m.lam + obs.cost(sequence[0])
    backpointers = []
    for sym in sequence[1:]:
        x, bp = _step_with_backpointers(x, a, obs.cost(sym))
        backpointers.append(bp)
    terminal = x + m.rho
    cost = float(np.min(terminal))
    if not math.isfinite(cost):
        return cost, []
    return cost, _backtrace(backpointers, int(np.argmin(terminal)))


def prune_indicator(x: np.ndarray, theta: float) -> PruneReport:
    """Beam-pruning indicator via the Cuninghame-Green conjugate.

    eta = theta + half the min-plus inner product of x with itself
    (i.e. theta + min x); ybar[i] = eta - x[i]; negative entries mark
    pruned states.
    """
    x = as_trop(x)
    if theta < 0:
        raise ValueError("leniency parameter must be >= 0")
    finite = np.isfinite(x)
    if not finite.any():
        raise EmptyTrellisError("all trellis entries are +inf")
    if math.isinf(theta):
        ybar = np.where(finite, INF, -INF)
        support = np.flatnonzero(finite)
        return PruneReport(eta=INF, ybar=ybar, support=support,
                           r=ybar[support])
    eta = theta + 0.5 * float(minplus_mul(x[None, :], x[:, None])[0, 0])
    conj = np.full((x.size, x.size), -INF)
    np.fill_diagonal(conj, -x)
    ybar = maxplus_mul(conj, np.full((x.size, 1), eta))[:, 0]
    support = np.flatnonzero(ybar >= 0)
    return PruneReport(eta=eta, ybar=ybar, support=support, r=ybar[support])


def prune_step(x: np.ndarray, theta: float) -> np.ndarray:
    """Set pruned entries of the trellis vector to +inf."""
    report = prune_indicator(x, theta)
    out = np.full_like(np.asarray(x, float), INF)
    out[report.support] = np.asarray(x, float)[report.support]
    return out


def metric_nu(report: PruneReport, z: np.ndarray) -> float:
    """Normalized volume: -mean over survivors of log(r_i) / log(max r).

    Survivors sitting exactly on the polytope boundary (r_i = 0) are
    excluded; if the normalization degenerates (max r <= 1 or nothing
    left) the metric is 0 and the report is flagged degenerate.
    """
    z = as_trop(z)
    r = report.eta - z
    r = r[r > 0]
    rmax = r.max() if r.size else 0.0
    if r.size == 0 or rmax <= 1.0 or math.isinf(rmax):
        report.degenerate = True
        report.nu = 0.0
        return 0.0
    nu = float(-np.mean(np.log(r) / np.log(rmax)))
    report.nu = nu
    return nu


def metric_entropy(report: PruneReport, z: np.ndarray) -> float:
    """Normalized entropy: mean over survivors of z_i * exp(-z_i)."""
    z = as_trop(z)
    if z.size == 0:
        raise ValueError("empty support")
    terms = np.where(np.isfinite(z), z * np.exp(-z), 0.0)
    ent = float(np.mean(terms))
    report.entropy = ent
    return ent


def decode_with_metrics(m: Wfst, obs: ObservationModel, sequence: list[str],
                        theta: float):
    """Pruned decode returning (cost, path, per-step PruneReport list).

    Each trellis vector (the initial one included) is pruned with
    leniency theta right after it is formed, and the polytope metrics
    are evaluated on the surviving entries before pruning is applied.
    """
    a = build_matrices(m).A
    if not sequence:
        cost, path = viterbi_decode(m, obs, sequence)
        return cost, path, []
    reports = []
    x = m.lam + obs.cost(sequence[0])
    backpointers = []

    def prune(vec, step):
        try:
            report = prune_indicator(vec, theta)
        except EmptyTrellisError:
            raise EmptyTrellisError(f"trellis empty at step {step}") from None
        report.step = step
        z = vec[report.support]
        metric_nu(report, z)
        metric_entropy(report, z)
        out = np.full_like(vec, INF)
        out[report.support] = vec[report.support]
        reports.append(report)
        return out

    if not np.isfinite(x).any():
        return INF, [], reports
    x = prune(x, 0)
    for t, sym in enumerate(sequence[1:], start=1):
        x, bp = _step_with_backpointers(x, a, obs.cost(sym))
        backpointers.append(bp)
        if not np.isfinite(x).any():
            # structurally dead trellis, not a pruning artifact
            return INF, [], reports
        x = prune(x, t)
    terminal = x + m.rho
    cost = float(np.min(terminal))
    if not math.isfinite(cost):
        return cost, [], reports
    return cost, _backtrace(backpointers, int(np.argmin(terminal))), reports


def format_metrics_csv(reports: list[PruneReport]) -> str:
    """Per-step trace: step, survivor count, eta, nu, entropy, degenerate."""
    lines = ["step,support,eta,nu,entropy,degenerate"]
    for rep in reports:
        lines.append(
            f"{rep.step},{rep.support.size},{rep.eta:.9g},"
            f"{rep.nu:.9g},{rep.entropy:.9g},{int(rep.degenerate)}"
        )
    return "\n".join(lines) + "\n"


def parse_observation_model(text: str) -> ObservationModel:
    """Parse 'n_states n_symbols' then one 'symbol c_0 .. c_{n-1}' per line."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty observation model")
    try:
        n_states, n_symbols = (int(t) for t in lines[0].split())
    except ValueError:
        raise ParseError("expected header 'n_states n_symbols'", 1) from None
    if len(lines) - 1 != n_symbols:
        raise ParseError(f"expected {n_symbols} symbol lines, got {len(lines) - 1}")
    costs = {}
    for lineno, line in enumerate(lines[1:], start=2):
        toks = line.split()
        if len(toks) != n_states + 1:
            raise ParseError(f"expected symbol plus {n_states} costs", lineno)
        try:
            costs[toks[0]] = np.array([parse_weight(t) for t in toks[1:]])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    return ObservationModel(n_states=n_states, costs=costs)


def parse_sequence(text: str) -> list[str]:
    """Whitespace-separated observation symbols."""
    return text.split()
