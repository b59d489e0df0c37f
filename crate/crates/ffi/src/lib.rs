//! C ABI over `primeperm`.
//!
//! Objects cross the boundary as opaque handles created by a `pp_*_new` or
//! producing call and released by the matching `pp_*_free`. Every fallible
//! call returns a [`PpStatus`]; on failure `pp_last_error_message` describes
//! the most recent error on the calling thread. Output parameters are written
//! only on success.
//!
//! Counts are returned as NUL-terminated decimal strings because they do not
//! fit any fixed-width integer in general; release them with `pp_string_free`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use primeperm::{
    construct_prime_sum_permutation, count_solutions, enumerate_solutions, is_valid_solution,
    validate_image, CountConfig, Error, Method, Permutation, PrimeSieve, Solutions,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PpStatus {
    Ok = 0,
    NullPointer = 1,
    OutOfRange = 2,
    SieveTooLarge = 3,
    BertrandViolation = 4,
    MalformedPermutation = 5,
    CapExceeded = 6,
    Parse = 7,
    BufferTooSmall = 8,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PpMethod {
    Auto = 0,
    Naive = 1,
    Dp = 2,
    Ryser = 3,
}

impl From<PpMethod> for Method {
    fn from(m: PpMethod) -> Self {
        match m {
            PpMethod::Auto => Method::Auto,
            PpMethod::Naive => Method::Naive,
            PpMethod::Dp => Method::Dp,
            PpMethod::Ryser => Method::Ryser,
        }
    }
}

/// Caps for the counters. Obtain defaults from `pp_count_config_default`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct PpCountConfig {
    pub naive_cap: usize,
    pub dp_cap: usize,
    pub ryser_cap: usize,
    /// Naive counting walks all n! permutations instead of backtracking.
    pub strict_all_permutations: bool,
}

impl From<PpCountConfig> for CountConfig {
    fn from(c: PpCountConfig) -> Self {
        CountConfig {
            naive_cap: c.naive_cap,
            dp_cap: c.dp_cap,
            ryser_cap: c.ryser_cap,
            strict_all_permutations: c.strict_all_permutations,
            ..CountConfig::default()
        }
    }
}

/// Opaque primality table.
pub struct PpSieve(PrimeSieve);

/// Opaque permutation of 1..n.
pub struct PpPermutation(Permutation);

/// Opaque lexicographic stream of solutions.
pub struct PpSolutions(Solutions);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PpStatus {
    match e {
        Error::OutOfRange { .. } => PpStatus::OutOfRange,
        Error::SieveTooLarge { .. } => PpStatus::SieveTooLarge,
        Error::BertrandViolation { .. } => PpStatus::BertrandViolation,
        Error::MalformedPermutation(_) => PpStatus::MalformedPermutation,
        Error::CapExceeded { .. } => PpStatus::CapExceeded,
        Error::Parse(_) => PpStatus::Parse,
    }
}

enum Fail {
    Lib(Error),
    Status(PpStatus, String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(PpStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> PpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PpStatus::Ok,
        Ok(Err(Fail::Lib(e))) => {
            let status = status_of(&e);
            set_last_error(e.to_string());
            status
        }
        Ok(Err(Fail::Status(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside primeperm".into());
            PpStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Message for the last failed call on this thread, or NULL if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a sieve answering primality for 0..=limit.
#[no_mangle]
pub unsafe extern "C" fn pp_sieve_new(limit: usize, out: *mut *mut PpSieve) -> PpStatus {
    guard(|| {
        let sieve = PrimeSieve::new(limit)?;
        write_out(out, Box::into_raw(Box::new(PpSieve(sieve))))
    })
}

/// Sieve large enough for every sum that occurs at problem size n.
#[no_mangle]
pub unsafe extern "C" fn pp_sieve_for_problem_size(n: usize, out: *mut *mut PpSieve) -> PpStatus {
    guard(|| {
        let sieve = PrimeSieve::for_problem_size(n)?;
        write_out(out, Box::into_raw(Box::new(PpSieve(sieve))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn pp_sieve_free(sieve: *mut PpSieve) {
    if !sieve.is_null() {
        drop(Box::from_raw(sieve));
    }
}

/// Largest value the sieve answers for; 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn pp_sieve_limit(sieve: *const PpSieve) -> usize {
    sieve.as_ref().map_or(0, |s| s.0.limit())
}

#[no_mangle]
pub unsafe extern "C" fn pp_sieve_is_prime(
    sieve: *const PpSieve,
    m: usize,
    out: *mut bool,
) -> PpStatus {
    guard(|| {
        let s = deref(sieve, "sieve")?;
        write_out(out, s.0.is_prime(m)?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn pp_sieve_least_prime_greater_than(
    sieve: *const PpSieve,
    k: usize,
    out: *mut usize,
) -> PpStatus {
    guard(|| {
        let s = deref(sieve, "sieve")?;
        write_out(out, s.0.least_prime_greater_than(k)?)
    })
}

/// Number of primes strictly below `bound`.
#[no_mangle]
pub unsafe extern "C" fn pp_sieve_count_primes_below(
    sieve: *const PpSieve,
    bound: usize,
    out: *mut usize,
) -> PpStatus {
    guard(|| {
        let s = deref(sieve, "sieve")?;
        write_out(out, s.0.count_primes_below(bound)?)
    })
}

/// Copies `len` entries of one-line notation into a new permutation handle.
/// `image` may be NULL when `len` is 0.
#[no_mangle]
pub unsafe extern "C" fn pp_permutation_from_image(
    image: *const usize,
    len: usize,
    out: *mut *mut PpPermutation,
) -> PpStatus {
    guard(|| {
        let entries = raw_slice(image, len)?;
        let perm = Permutation::new(entries.to_vec())?;
        write_out(out, Box::into_raw(Box::new(PpPermutation(perm))))
    })
}

/// Parses comma-separated one-line notation such as `1,5,4,3,2`.
#[no_mangle]
pub unsafe extern "C" fn pp_permutation_parse(
    text: *const c_char,
    out: *mut *mut PpPermutation,
) -> PpStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail::Status(PpStatus::Parse, "text is not UTF-8".into()))?;
        let perm: Permutation = text.parse()?;
        write_out(out, Box::into_raw(Box::new(PpPermutation(perm))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn pp_permutation_free(perm: *mut PpPermutation) {
    if !perm.is_null() {
        drop(Box::from_raw(perm));
    }
}

/// Domain size n; 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn pp_permutation_len(perm: *const PpPermutation) -> usize {
    perm.as_ref().map_or(0, |p| p.0.n())
}

/// Borrowed pointer to the n entries π(1), ..., π(n). Valid while the handle
/// lives; NULL for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn pp_permutation_image(perm: *const PpPermutation) -> *const usize {
    perm.as_ref().map_or(ptr::null(), |p| p.0.image().as_ptr())
}

/// Block-reversal witness for n. The sieve must cover 2n.
#[no_mangle]
pub unsafe extern "C" fn pp_construct(
    n: usize,
    sieve: *const PpSieve,
    out: *mut *mut PpPermutation,
) -> PpStatus {
    guard(|| {
        let s = deref(sieve, "sieve")?;
        let perm = construct_prime_sum_permutation(n, &s.0)?;
        write_out(out, Box::into_raw(Box::new(PpPermutation(perm))))
    })
}

/// Sets `*out` to whether every sum k + π(k) is prime.
#[no_mangle]
pub unsafe extern "C" fn pp_is_valid_solution(
    perm: *const PpPermutation,
    sieve: *const PpSieve,
    out: *mut bool,
) -> PpStatus {
    guard(|| {
        let p = deref(perm, "permutation")?;
        let s = deref(sieve, "sieve")?;
        write_out(out, is_valid_solution(&p.0, &s.0)?)
    })
}

/// Like `pp_is_valid_solution` on a raw array; a non-bijection yields
/// `PP_STATUS_MALFORMED_PERMUTATION`.
#[no_mangle]
pub unsafe extern "C" fn pp_validate_image(
    image: *const usize,
    len: usize,
    sieve: *const PpSieve,
    out: *mut bool,
) -> PpStatus {
    guard(|| {
        let entries = raw_slice(image, len)?;
        let s = deref(sieve, "sieve")?;
        write_out(out, validate_image(entries, &s.0)?)
    })
}

#[no_mangle]
pub extern "C" fn pp_count_config_default() -> PpCountConfig {
    let d = CountConfig::default();
    PpCountConfig {
        naive_cap: d.naive_cap,
        dp_cap: d.dp_cap,
        ryser_cap: d.ryser_cap,
        strict_all_permutations: d.strict_all_permutations,
    }
}

/// Exact number of solutions for n as a decimal string. `config` may be NULL
/// for defaults. Release the string with `pp_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pp_count(
    n: usize,
    method: PpMethod,
    sieve: *const PpSieve,
    config: *const PpCountConfig,
    out: *mut *mut c_char,
) -> PpStatus {
    guard(|| {
        let s = deref(sieve, "sieve")?;
        let config: CountConfig = config
            .as_ref()
            .map_or_else(CountConfig::default, |c| (*c).into());
        let count = count_solutions(n, method.into(), &s.0, &config)?;
        let text = CString::new(count.to_string()).expect("digits contain no NUL");
        write_out(out, text.into_raw())
    })
}

#[no_mangle]
pub unsafe extern "C" fn pp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Starts a lexicographic stream of all solutions for n. `limit` of 0 means
/// no limit. The stream does not borrow the sieve.
#[no_mangle]
pub unsafe extern "C" fn pp_solutions_new(
    n: usize,
    sieve: *const PpSieve,
    limit: usize,
    out: *mut *mut PpSolutions,
) -> PpStatus {
    guard(|| {
        let s = deref(sieve, "sieve")?;
        let limit = (limit > 0).then_some(limit);
        let stream = enumerate_solutions(n, &s.0, limit)?;
        write_out(out, Box::into_raw(Box::new(PpSolutions(stream))))
    })
}

/// Writes the next solution into `buf` (which must hold n entries) and sets
/// `*has_next`. When the stream is exhausted `*has_next` is false and `buf`
/// is left untouched.
#[no_mangle]
pub unsafe extern "C" fn pp_solutions_next(
    stream: *mut PpSolutions,
    buf: *mut usize,
    buf_len: usize,
    has_next: *mut bool,
) -> PpStatus {
    guard(|| {
        let it = stream.as_mut().ok_or_else(|| null("stream"))?;
        if has_next.is_null() {
            return Err(null("has_next"));
        }
        let n = it.0.n();
        if buf_len < n {
            return Err(Fail::Status(
                PpStatus::BufferTooSmall,
                format!("buffer holds {buf_len} entries, need {n}"),
            ));
        }
        if n > 0 && buf.is_null() {
            return Err(null("buf"));
        }
        match it.0.next() {
            Some(perm) => {
                if n > 0 {
                    ptr::copy_nonoverlapping(perm.image().as_ptr(), buf, n);
                }
                has_next.write(true);
            }
            None => has_next.write(false),
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn pp_solutions_free(stream: *mut PpSolutions) {
    if !stream.is_null() {
        drop(Box::from_raw(stream));
    }
}

unsafe fn raw_slice<'a>(data: *const usize, len: usize) -> Result<&'a [usize], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null("image"));
    }
    Ok(std::slice::from_raw_parts(data, len))
}
