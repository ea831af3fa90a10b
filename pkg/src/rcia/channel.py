"""Per-slot channel realizations, input/output application and CSI visibility.

Two-user models:

* interference channel (IC): transmitters T1 (M1 antennas) and T2 (M2),
  receivers R1 (N1) and R2 (N2).  Receivers are full duplex, so each slot
  they may also transmit; a receiver's own transmission does not appear in
  its own output.
* broadcast channel (BC): one transmitter T (M antennas), receivers R1, R2.

Channel entries are i.i.d. unit-variance complex Gaussian, independent
across slots.  Transmitters know nothing; each receiver knows every direct
channel matrix and its own incoming cooperation link instantaneously, but
never the realizations of its outgoing link.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionError, PowerGuardError
from .numerics import SeededRng, gaussian_matrix

IC_TERMINALS = ("T1", "T2", "R1", "R2")
BC_TERMINALS = ("T", "R1", "R2")


@dataclass(frozen=True)
class IcConfig:
    m1: int
    m2: int
    n1: int
    n2: int

    def __post_init__(self):
        if min(self.m1, self.m2, self.n1, self.n2) < 1:
            raise DimensionError(f"antenna counts must be >= 1, got {self}")

    @property
    def kind(self):
        return "ic"

    def matrix_shapes(self):
        return {
            "h11": (self.n1, self.m1),
            "h12": (self.n1, self.m2),
            "h21": (self.n2, self.m1),
            "h22": (self.n2, self.m2),
            "g12": (self.n1, self.n2),
            "g21": (self.n2, self.n1),
        }

    def antennas(self, terminal: str) -> int:
        try:
            return {"T1": self.m1, "T2": self.m2, "R1": self.n1, "R2": self.n2}[terminal]
        except KeyError:
            raise ValueError(f"unknown IC terminal {terminal!r}") from None


@dataclass(frozen=True)
class BcConfig:
    m: int
    n1: int
    n2: int

    def __post_init__(self):
        if min(self.m, self.n1, self.n2) < 1:
            raise DimensionError(f"antenna counts must be >= 1, got {self}")

    @property
    def kind(self):
        return "bc"

    def matrix_shapes(self):
        return {
            "h1": (self.n1, self.m),
            "h2": (self.n2, self.m),
            "g12": (self.n1, self.n2),
            "g21": (self.n2, self.n1),
        }

    def antennas(self, terminal: str) -> int:
        try:
            return {"T": self.m, "R1": self.n1, "R2": self.n2}[terminal]
        except KeyError:
            raise ValueError(f"unknown BC terminal {terminal!r}") from None


@dataclass(frozen=True)
class NoiseMode:
    """Noise-free (alignment analysis) or noisy with per-terminal power P."""

    variant: str  # "noise-free" | "noisy"
    power: Optional[float] = None

    @classmethod
    def noise_free(cls):
        return cls("noise-free")

    @classmethod
    def noisy(cls, power: float):
        if power <= 0:
            raise ValueError("power must be positive in noisy mode")
        return cls("noisy", float(power))

    @classmethod
    def noisy_db(cls, power_db: float):
        return cls.noisy(10.0 ** (power_db / 10.0))

    @property
    def is_noisy(self):
        return self.variant == "noisy"


@dataclass(frozen=True)
class ChannelState:
    """One slot's realized channel matrices."""

    t: int
    config: object  # IcConfig | BcConfig
    mats: dict

    def __getitem__(self, name: str) -> np.ndarray:
        return self.mats[name]


@dataclass(frozen=True)
class CsiView:
    """Matrix names a terminal can evaluate, for every slot up to the present."""

    terminal: str
    visible: frozenset


def _sample_state(config, t: int, rng: SeededRng) -> ChannelState:
    if t < 1:
        raise ValueError(f"slot index must be >= 1, got {t}")
    mats = {}
    for name, (rows, cols) in config.matrix_shapes().items():
        # Per-(slot, matrix) substream: draws are independent across slots and
        # matrices and do not depend on sampling order.
        mats[name] = gaussian_matrix(rng.substream(t, name), rows, cols)
    return ChannelState(t=t, config=config, mats=mats)


def sample_ic_state(cfg: IcConfig, t: int, rng: SeededRng) -> ChannelState:
    return _sample_state(cfg, t, rng)


def sample_bc_state(cfg: BcConfig, t: int, rng: SeededRng) -> ChannelState:
    return _sample_state(cfg, t, rng)


def _check_vec(x, length, who):
    x = np.asarray(x, dtype=complex).reshape(-1)
    if x.shape[0] != length:
        raise DimensionError(f"{who}: expected length {length}, got {x.shape[0]}")
    return x


def _guard_power(x, mode: NoiseMode, who):
    if mode.is_noisy:
        p_inst = float(np.vdot(x, x).real)
        if p_inst > 10.0 * mode.power:
            raise PowerGuardError(
                f"{who}: instantaneous power {p_inst:.3g} exceeds 10*P = {10 * mode.power:.3g}"
            )


def _noise(rng: Optional[SeededRng], n: int, mode: NoiseMode, tag):
    if not mode.is_noisy:
        return np.zeros(n, dtype=complex)
    if rng is None:
        raise ValueError("noisy mode needs an rng for the additive noise")
    return rng.substream(*tag).complex_gaussian(n)


def apply_ic(state: ChannelState, x1, x2, xr1, xr2, mode: NoiseMode, rng: Optional[SeededRng] = None):
    """Outputs (y1, y2) of the cooperative IC for one slot.

    y1 = h11 x1 + h12 x2 + g12 xr2 (+ w1), y2 = h21 x1 + h22 x2 + g21 xr1
    (+ w2); no self term.
    """
    cfg = state.config
    x1 = _check_vec(x1, cfg.m1, "x1")
    x2 = _check_vec(x2, cfg.m2, "x2")
    xr1 = _check_vec(xr1, cfg.n1, "xr1")
    xr2 = _check_vec(xr2, cfg.n2, "xr2")
    for x, who in ((x1, "T1"), (x2, "T2"), (xr1, "R1"), (xr2, "R2")):
        _guard_power(x, mode, who)
    y1 = state["h11"] @ x1 + state["h12"] @ x2 + state["g12"] @ xr2
    y2 = state["h21"] @ x1 + state["h22"] @ x2 + state["g21"] @ xr1
    y1 = y1 + _noise(rng, cfg.n1, mode, ("w1", state.t))
    y2 = y2 + _noise(rng, cfg.n2, mode, ("w2", state.t))
    return y1, y2


def apply_bc(state: ChannelState, x, xr1, xr2, mode: NoiseMode, rng: Optional[SeededRng] = None):
    """Outputs (y1, y2) of the cooperative BC for one slot."""
    cfg = state.config
    x = _check_vec(x, cfg.m, "x")
    xr1 = _check_vec(xr1, cfg.n1, "xr1")
    xr2 = _check_vec(xr2, cfg.n2, "xr2")
    for v, who in ((x, "T"), (xr1, "R1"), (xr2, "R2")):
        _guard_power(v, mode, who)
    y1 = state["h1"] @ x + state["g12"] @ xr2
    y2 = state["h2"] @ x + state["g21"] @ xr1
    y1 = y1 + _noise(rng, cfg.n1, mode, ("w1", state.t))
    y2 = y2 + _noise(rng, cfg.n2, mode, ("w2", state.t))
    return y1, y2


def csi_view(cfg, terminal: str) -> CsiView:
    """What a terminal can evaluate: transmitters nothing; receiver i all
    direct matrices plus its incoming cooperation link, never the outgoing one.
    """
    if cfg.kind == "ic":
        views = {
            "T1": frozenset(),
            "T2": frozenset(),
            "R1": frozenset({"h11", "h12", "h21", "h22", "g12"}),
            "R2": frozenset({"h11", "h12", "h21", "h22", "g21"}),
        }
    else:
        views = {
            "T": frozenset(),
            "R1": frozenset({"h1", "h2", "g12"}),
            "R2": frozenset({"h1", "h2", "g21"}),
        }
    if terminal not in views:
        raise ValueError(f"unknown terminal {terminal!r} for {cfg.kind} model")
    return CsiView(terminal=terminal, visible=views[terminal])
