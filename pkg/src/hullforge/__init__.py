"""Binary linear codes with hull control: lengthening constructions,
desk-scale searches, and entanglement-assisted quantum code parameters."""

from .buildup import (
    BuildResult,
    ConstructionKind,
    ExtensionVector,
    admissible_distances,
    classify_extension,
    construct,
    construct_I,
    construct_II,
    construct_III,
    construct_IV,
    predict_distance,
)
from .code import (
    CosetWeightProfile,
    HullReport,
    LinearCode,
    WeightDistribution,
    enumeration_cap,
    from_generator,
)
from .corpus import (
    ComparisonRow,
    CorpusEntry,
    MatrixFile,
    QuarantinedEntry,
    TableCell,
    load_comparison,
    load_corpus,
    load_quarantine,
    load_tables,
    parse_matrix_file,
)
from .eaqecc import (
    DerivationPair,
    EaqeccParams,
    QuantumCell,
    QuantumTable,
    derive,
    format_quantum_table,
    quantum_table_from_cells,
    singleton_gap,
    tabulate,
)
from .errors import (
    CorpusFormatError,
    CorpusValidationError,
    DimensionError,
    HullforgeError,
    InvalidCodeError,
    NoRankGainError,
    ResourceLimitError,
    UsageError,
    WrongConstructionError,
    WrongParityError,
)
from .gf2 import BitMatrix, BitVector
from .search import (
    EquivalenceVerdict,
    OptimalityClaim,
    SweepRecord,
    are_equivalent,
    best_by_sweep,
    exhaustive_codes,
    hull_census,
    iter_exhaustive,
    sweep_extensions,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BitVector",
    "BuildResult",
    "ComparisonRow",
    "ConstructionKind",
    "CorpusEntry",
    "CorpusFormatError",
    "CorpusValidationError",
    "CosetWeightProfile",
    "DerivationPair",
    "DimensionError",
    "EaqeccParams",
    "EquivalenceVerdict",
    "ExtensionVector",
    "HullReport",
    "HullforgeError",
    "InvalidCodeError",
    "LinearCode",
    "MatrixFile",
    "NoRankGainError",
    "OptimalityClaim",
    "QuantumCell",
    "QuantumTable",
    "QuarantinedEntry",
    "ResourceLimitError",
    "SweepRecord",
    "TableCell",
    "UsageError",
    "WeightDistribution",
    "WrongConstructionError",
    "WrongParityError",
    "admissible_distances",
    "are_equivalent",
    "best_by_sweep",
    "classify_extension",
    "construct",
    "construct_I",
    "construct_II",
    "construct_III",
    "construct_IV",
    "derive",
    "enumeration_cap",
    "exhaustive_codes",
    "format_quantum_table",
    "from_generator",
    "hull_census",
    "iter_exhaustive",
    "load_comparison",
    "load_corpus",
    "load_quarantine",
    "load_tables",
    "parse_matrix_file",
    "predict_distance",
    "quantum_table_from_cells",
    "singleton_gap",
    "sweep_extensions",
    "tabulate",
]
