use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("poset is not graded: {0}")]
    NotGraded(String),
    #[error("poset has no unique {0} element")]
    NoUniqueExtremum(&'static str),
    #[error("bond on cover {lower} < {upper} is {bond}, bonds must be positive")]
    NonPositiveBond { lower: String, upper: String, bond: i64 },
    #[error("cover {lower} < {upper} is implied by a longer chain")]
    RedundantCover { lower: String, upper: String },
    #[error("cover relation contains a cycle")]
    CyclicCovers,
    #[error("interval [{lower}, {upper}] has more than {bound} maximal chains")]
    IntervalTooLarge { lower: String, upper: String, bound: u64 },
    #[error("more than {0} maximal chains")]
    TooManyChains(u64),
    #[error("bond gcd condition fails on [{lower}, {upper}]: gcd {gcd1} vs {gcd2}")]
    GcdCondition { lower: String, upper: String, gcd1: u64, gcd2: u64 },
    #[error("elements `{0}` and `{1}` are not comparable")]
    NotComparable(String, String),
    #[error("not an LS path: {0}")]
    NotAnLSPath(String),
    #[error("factors do not have comparable supports")]
    NonComparableSupports,
    #[error("path has width one, nothing to split")]
    WidthOne,
    #[error("zero path has no width")]
    ZeroPath,
    #[error("{what} exceeds the configured bound {bound}")]
    TooLarge { what: &'static str, bound: u64 },
    #[error("elements do not form a chain")]
    NotAChain,
    #[error("no straightening entry for the non-standard monomial {0}")]
    MissingEntry(String),
    #[error("straightening target {0} is not a standard monomial")]
    NonStandardTarget(String),
    #[error("quasi-valuation of the zero element")]
    ZeroElement,
    #[error("no valuation value supplied for {0}")]
    MissingValue(String),
    #[error("no value supplied for maximal chain {0}")]
    MissingChain(String),
    #[error("no chain element lies above {0}")]
    NoSuchElement(String),
    #[error("unsupported root system type {0}")]
    UnsupportedType(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("orbit larger than {0} elements")]
    OrbitTooLarge(u64),
    #[error("malformed Littelmann pair: {0}")]
    MalformedPair(String),
    #[error("exact linear solve failed: {0}")]
    SolveFailed(String),
    #[error("valuation search bound {0} exceeded")]
    BoundExceeded(u64),
    #[error("element is not in the coordinate ring: {0}")]
    NotInRing(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable kebab-case name used in machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DuplicateLabel(_) => "duplicate-label",
            Error::UnknownElement(_) => "unknown-element",
            Error::NotGraded(_) => "not-graded",
            Error::NoUniqueExtremum(_) => "no-unique-extremum",
            Error::NonPositiveBond { .. } => "non-positive-bond",
            Error::RedundantCover { .. } => "redundant-cover",
            Error::CyclicCovers => "cyclic-covers",
            Error::IntervalTooLarge { .. } => "interval-too-large",
            Error::TooManyChains(_) => "too-many-chains",
            Error::GcdCondition { .. } => "gcd-condition",
            Error::NotComparable(..) => "not-comparable",
            Error::NotAnLSPath(_) => "not-an-ls-path",
            Error::NonComparableSupports => "non-comparable-supports",
            Error::WidthOne => "width-one",
            Error::ZeroPath => "zero-path",
            Error::TooLarge { .. } => "too-large",
            Error::NotAChain => "not-a-chain",
            Error::MissingEntry(_) => "missing-entry",
            Error::NonStandardTarget(_) => "non-standard-target",
            Error::ZeroElement => "zero-element",
            Error::MissingValue(_) => "missing-value",
            Error::MissingChain(_) => "missing-chain",
            Error::NoSuchElement(_) => "no-such-element",
            Error::UnsupportedType(_) => "unsupported-type",
            Error::NotDominant(_) => "not-dominant",
            Error::OrbitTooLarge(_) => "orbit-too-large",
            Error::MalformedPair(_) => "malformed-pair",
            Error::SolveFailed(_) => "solve-failed",
            Error::BoundExceeded(_) => "bound-exceeded",
            Error::NotInRing(_) => "not-in-ring",
            Error::Parse(_) => "parse-error",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
