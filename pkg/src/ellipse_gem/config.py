"""Configuration dataclasses for the GEM clustering pipeline.

All tunables live here: damping factors, ridge and projection constants,
grid sizes, iteration caps, and seeds.  Defaults follow the values used in
the simulation studies where those are stated, and conservative numerical
choices elsewhere.
"""

from dataclasses import asdict, dataclass, field, replace

from .exceptions import ConfigError


@dataclass
class ShapeConfig:
    """Tunables of the common precision-shape update block."""

    rho_T: float = 0.05            # Tyler ridge, in (0, 1)
    eps_r: float = 1e-10           # radial floor in spatial-sign / Tyler weights
    eps_pd: float = 1e-8           # eigenvalue floor of the PD projection
    c_u: float = 0.5               # POET threshold constant
    c_Omega: float = 0.5           # glasso base-penalty constant
    gamma_ebic: float = 0.5        # EBIC edge-count weight
    lambda_grid_multipliers: tuple = (0.25, 0.5, 1.0, 2.0, 4.0)
    M_kr: int = 8                  # eigenvalue-ratio search cap
    tyler_max_iter: int = 100
    tyler_tol: float = 1e-6
    eta_Omega: float = 0.7         # precision damping, in (0, 1]
    glasso_tol: float = 1e-5
    glasso_max_iter: int = 300

    def validate(self):
        if not 0.0 < self.rho_T < 1.0:
            raise ConfigError(f"rho_T must be in (0, 1), got {self.rho_T}")
        for name in ("eps_r", "eps_pd", "c_u", "c_Omega", "tyler_tol", "glasso_tol"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if self.gamma_ebic < 0:
            raise ConfigError(f"gamma_ebic must be nonnegative, got {self.gamma_ebic}")
        if not self.lambda_grid_multipliers:
            raise ConfigError("lambda_grid_multipliers must be nonempty")
        if any(m <= 0 for m in self.lambda_grid_multipliers):
            raise ConfigError("lambda_grid_multipliers must be positive")
        if self.M_kr < 1:
            raise ConfigError(f"M_kr must be >= 1, got {self.M_kr}")
        if self.tyler_max_iter < 1 or self.glasso_max_iter < 1:
            raise ConfigError("iteration caps must be >= 1")
        if not 0.0 < self.eta_Omega <= 1.0:
            raise ConfigError(f"eta_Omega must be in (0, 1], got {self.eta_Omega}")


@dataclass
class GemConfig:
    """Full tunable set for one GEM fit."""

    K: int = 2
    seed: int = 0
    starts: int = 3                # outer random starts
    max_outer: int = 25
    outer_tol: float = 1e-4
    eta_mu: float = 0.7            # center damping, in (0, 1]
    shape: ShapeConfig = field(default_factory=ShapeConfig)

    # generator knobs
    grid_size: int = 200           # radius-grid length M
    lambda_sp: float = 1e-3        # spline smoothing on the rescaled axis
    h_min: float = 1e-3            # bandwidth floor
    eps_u: float = 1e-8            # radius-grid floor
    omega_min: float = 1e-3        # radial-score clip bounds
    omega_max: float = 1e3

    # sparse K-median initialization knobs
    init_quantiles: int = 9        # threshold grid: this many positive-dispersion deciles plus 0
    init_permutations: int = 10    # permutation replicates B in the threshold selector
    init_starts: int = 5
    init_max_iter: int = 50

    def validate(self):
        if self.K < 1:
            raise ConfigError(f"K must be >= 1, got {self.K}")
        if self.starts < 1:
            raise ConfigError(f"starts must be >= 1, got {self.starts}")
        if self.max_outer < 1:
            raise ConfigError(f"max_outer must be >= 1, got {self.max_outer}")
        if self.outer_tol <= 0:
            raise ConfigError(f"outer_tol must be positive, got {self.outer_tol}")
        if not 0.0 < self.eta_mu <= 1.0:
            raise ConfigError(f"eta_mu must be in (0, 1], got {self.eta_mu}")
        if self.grid_size < 2:
            raise ConfigError(f"grid_size must be >= 2, got {self.grid_size}")
        for name in ("lambda_sp", "h_min", "eps_u", "omega_min"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if self.omega_max <= self.omega_min:
            raise ConfigError("omega_max must exceed omega_min")
        if self.init_quantiles < 0:
            raise ConfigError("init_quantiles must be >= 0")
        if self.init_permutations < 1:
            raise ConfigError("init_permutations must be >= 1")
        if self.init_starts < 1 or self.init_max_iter < 1:
            raise ConfigError("init_starts and init_max_iter must be >= 1")
        self.shape.validate()

    def with_k(self, K: int) -> "GemConfig":
        return replace(self, K=int(K))

    def with_seed(self, seed: int) -> "GemConfig":
        return replace(self, seed=int(seed))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["shape"]["lambda_grid_multipliers"] = list(self.shape.lambda_grid_multipliers)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GemConfig":
        d = dict(d)
        shape_d = dict(d.pop("shape", {}))
        if "lambda_grid_multipliers" in shape_d:
            shape_d["lambda_grid_multipliers"] = tuple(shape_d["lambda_grid_multipliers"])
        unknown = set(shape_d) - {f.name for f in ShapeConfig.__dataclass_fields__.values()}
        if unknown:
            raise ConfigError(f"unknown shape config keys: {sorted(unknown)}")
        unknown = set(d) - {f.name for f in cls.__dataclass_fields__.values()}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(shape=ShapeConfig(**shape_d), **d)
