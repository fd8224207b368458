"""minorbit: integral cohomology of minimal nilpotent orbits.

Root systems, their long-root level diagrams and the Chern-class matrices
of the Gysin sequence, reduced exactly over the integers.
"""

from minorbit.check import Check, CheckOutcome, CheckSequence, check
from minorbit.config import DEFAULT, QUICK, THOROUGH, EngineConfig
from minorbit.context import CheckTiming, RunContext, SystemTally
from minorbit.errors import (
    CapExceededError,
    CheckError,
    FixtureError,
    InvalidTypeError,
    MinorbitError,
    NonInvariantWeightError,
    ShortRootError,
)
from minorbit.gysin import (
    CharacterWeight,
    GradedCohomology,
    line_bundle_cohomology,
    middle_group,
    minimal_orbit_cohomology,
    verify_profiles,
)
from minorbit.orbitposet import (
    LevelDiagram,
    build_level_diagram,
    differential_matrices,
    differential_matrix,
)
from minorbit.rootsys import Root, RootSystem, build
from minorbit.suite import Suite, SuiteReport
from minorbit.tracer import NullTracer, StderrTracer, Tracer
from minorbit.typea import typea_cohomology
from minorbit.weyl import WeylGroup
from minorbit.zlinalg import FGAbelianGroup, IntMatrix, snf

__version__ = "0.1.0"

__all__ = [
    "build",
    "Root",
    "RootSystem",
    "WeylGroup",
    "LevelDiagram",
    "build_level_diagram",
    "differential_matrix",
    "differential_matrices",
    "IntMatrix",
    "FGAbelianGroup",
    "snf",
    "GradedCohomology",
    "CharacterWeight",
    "minimal_orbit_cohomology",
    "middle_group",
    "line_bundle_cohomology",
    "verify_profiles",
    "typea_cohomology",
    "check",
    "Check",
    "CheckOutcome",
    "CheckSequence",
    "Suite",
    "SuiteReport",
    "RunContext",
    "CheckTiming",
    "SystemTally",
    "Tracer",
    "NullTracer",
    "StderrTracer",
    "EngineConfig",
    "DEFAULT",
    "QUICK",
    "THOROUGH",
    "MinorbitError",
    "InvalidTypeError",
    "ShortRootError",
    "CapExceededError",
    "NonInvariantWeightError",
    "CheckError",
    "FixtureError",
]
