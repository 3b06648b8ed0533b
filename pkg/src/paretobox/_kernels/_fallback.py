"""NumPy implementations of the hot kernels.

Used when the compiled extension is unavailable (or forced via
PARETOBOX_KERNELS=python). Same contracts as `_core`, vectorized instead of
looped; results agree with the compiled kernels to floating-point noise.
"""

from __future__ import annotations

import numpy as np

NAME = "python"

_LOG_2PI = float(np.log(2.0 * np.pi))


def pareto_mask(costs: np.ndarray) -> np.ndarray:
    """Boolean mask of non-dominated rows under minimization.

    Row i dominates row j when costs[i] <= costs[j] everywhere and < somewhere.
    Duplicate rows do not dominate each other, so all copies stay optimal.
    """
    costs = np.ascontiguousarray(costs, dtype=np.float64)
    n = costs.shape[0]
    mask = np.ones(n, dtype=bool)
    for i in range(n):
        if not mask[i]:
            # transitivity: anything i would eliminate, i's dominator eliminates
            continue
        row = costs[i]
        dominated = np.all(costs >= row, axis=1) & np.any(costs > row, axis=1)
        mask &= ~dominated
    return mask


def em_fit_diag(
    x: np.ndarray,
    weights: np.ndarray,
    means: np.ndarray,
    variances: np.ndarray,
    floor: float,
    max_iters: int,
    tol: float,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """EM for a diagonal-covariance Gaussian mixture.

    Starts from the given model, runs at most `max_iters` iterations, and
    stops early when the log-likelihood improves by less than `tol`.
    Variances never drop below `floor`. Returns the updated (weights, means,
    variances) plus the log-likelihood recorded before each M-step.
    """
    x = np.ascontiguousarray(x, dtype=np.float64)
    weights = np.array(weights, dtype=np.float64)
    means = np.array(means, dtype=np.float64)
    variances = np.maximum(np.array(variances, dtype=np.float64), floor)
    n, d = x.shape
    lls: list[float] = []
    prev = None
    for _ in range(max_iters):
        log_norm = -0.5 * (d * _LOG_2PI + np.sum(np.log(variances), axis=1))
        diff = x[:, None, :] - means[None, :, :]
        maha = np.sum(diff * diff / variances[None, :, :], axis=2)
        log_prob = np.log(weights)[None, :] + log_norm[None, :] - 0.5 * maha
        peak = np.max(log_prob, axis=1, keepdims=True)
        log_sum = peak[:, 0] + np.log(np.sum(np.exp(log_prob - peak), axis=1))
        ll = float(np.sum(log_sum))
        lls.append(ll)
        if prev is not None and abs(ll - prev) < tol:
            break
        prev = ll

        resp = np.exp(log_prob - log_sum[:, None])
        counts = np.maximum(resp.sum(axis=0), 1e-300)
        weights = counts / n
        means = (resp.T @ x) / counts[:, None]
        diff = x[:, None, :] - means[None, :, :]
        variances = np.einsum("nk,nkd->kd", resp, diff * diff) / counts[:, None]
        variances = np.maximum(variances, floor)
    return weights, means, variances, np.asarray(lls)
