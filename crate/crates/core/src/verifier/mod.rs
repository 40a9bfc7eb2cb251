//! Expression parsing, verification pipelines, the exhaustive isotropy
//! oracle and certificates.

mod certificate;
mod oracle;
mod parser;
mod pipeline;

pub use certificate::{Certificate, Conventions, Step, Verdict};
pub use oracle::{brute_isotropy_search, monomials_up_to, OracleError, DEFAULT_CEILING};
pub use parser::{parse_ast, parse_expr, parse_list, ExprAst, ParseError};
pub use pipeline::{
    check_witnesses, oracle_isotropy, parse_symbol, rerun, verify_char0_reduction,
    verify_prop_char2, verify_theorem_a, VerifyConfig, VerifyError, ASSUME_BASE_FIELD,
    ASSUME_LIFTING, ASSUME_LINKAGE, ASSUME_M_LINKED, ASSUME_OUT_OF_SCOPE, ASSUME_SLOT_CRITERION,
    DEFAULT_MAX_N,
};
