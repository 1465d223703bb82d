# Domain types; services import from the individual modules.
from toricdeg.models.binomial import (  # noqa: F401
    Binomial,
    Comparison,
    GroebnerBasis,
    MinimalDegree,
    TermOrder,
    Tiebreak,
)
from toricdeg.models.corpus import (  # noqa: F401
    ExpectedFacts,
    FamilyInstance,
    FamilyName,
    IntervalCase,
    IntervalClassification,
)
from toricdeg.models.lattice import (  # noqa: F401
    CertificateKind,
    GeneratorMatrix,
    IntVector,
    RationalCertificate,
)
from toricdeg.models.moebius import MoebiusContext, SubsetWitness  # noqa: F401
from toricdeg.models.semigroup import (  # noqa: F401
    DegenerationContext,
    Fiber,
    SemigroupPresentation,
)
