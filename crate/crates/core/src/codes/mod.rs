//! The three code constructions with membership, enumeration, parameter
//! search and decoding, plus a generic oracle decoder and an exhaustive
//! verifier.

pub mod codebook;
pub mod oracle;
pub mod palindrome_free;
pub mod palindromic;
pub mod verify;
pub mod vt;

pub use codebook::{CodeSpec, Codebook};
pub use oracle::oracle_decode;
pub use palindrome_free::{
    cpf_count_closed, cpf_count_recursive, cpf_cubic_roots, cpf_decode, cpf_lambda, cpf_member,
    cpf_rate_table, PalindromeFreeCode, RateLength, RateRow,
};
pub use palindromic::{
    c2_best_params, c2_decode, c2_member, c2_size_lower_bound, c2_size_table, DecodeTrace,
    PalindromicL2Code,
};
pub use verify::{verify_code, VerifyReport};
pub use vt::{
    c1_best_params, c1_decode, c1_member, c1_size_lower_bound, vt_checksum, vt_member, TandemVtCode,
};
