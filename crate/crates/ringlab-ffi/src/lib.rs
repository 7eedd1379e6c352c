//! C ABI over the ringlab toolkit.
//!
//! Rings travel as opaque handles created by [`ringlab_ring_parse`] and
//! released by [`ringlab_ring_free`]. Every fallible call returns a
//! [`RinglabStatus`]; the message behind the most recent failure on the
//! current thread is available from [`ringlab_last_error_message`]. Strings
//! handed out by this library must be released with
//! [`ringlab_string_free`].

use ringlab::analysis::Analysis;
use ringlab::construct;
use ringlab::ideals;
use ringlab::parse::{parse_ring, serialize_ring};
use ringlab::predicates;
use ringlab::ring::{validate_ring, Caps, FiniteRing};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RinglabStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ValidationFailed = 4,
    LimitExceeded = 5,
    UnknownName = 6,
    ConstructionError = 7,
    InternalPanic = 8,
}

/// Opaque handle to a validated finite ring.
pub struct RinglabRing {
    inner: FiniteRing,
    caps: Caps,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(e: &ringlab::RingError) -> RinglabStatus {
    use ringlab::RingError::*;
    set_error(&e.to_string());
    match e {
        MalformedLine { .. }
        | MissingProduct { .. }
        | DuplicateProduct { .. }
        | BadArity { .. } => RinglabStatus::ParseError,
        OrderLimitExceeded { .. } | LatticeExplosion { .. } => RinglabStatus::LimitExceeded,
        UnknownPredicate { .. } | UnknownTheorem(_) | SyntaxError { .. } => {
            RinglabStatus::UnknownName
        }
        InvalidRing(_) => RinglabStatus::ValidationFailed,
        _ => RinglabStatus::ConstructionError,
    }
}

fn guard(f: impl FnOnce() -> RinglabStatus) -> RinglabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            RinglabStatus::InternalPanic
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, RinglabStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(RinglabStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        RinglabStatus::InvalidUtf8
    })
}

fn give_string(text: String, out: *mut *mut c_char) -> RinglabStatus {
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            RinglabStatus::Ok
        }
        Err(_) => {
            set_error("output contained an interior NUL");
            RinglabStatus::InternalPanic
        }
    }
}

/// Message describing the most recent failure on this thread. The pointer is
/// valid until the next ringlab call on the same thread.
#[no_mangle]
pub extern "C" fn ringlab_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses RINGSPEC text and validates the ring laws.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer. On
/// success `*out` owns a ring that must be released with
/// [`ringlab_ring_free`].
#[no_mangle]
pub unsafe extern "C" fn ringlab_ring_parse(
    text: *const c_char,
    out: *mut *mut RinglabRing,
) -> RinglabStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return RinglabStatus::NullArgument;
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let caps = Caps::from_env();
        let ring = match parse_ring(text) {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        if let Err(e) = caps.check_order(ring.order() as u128) {
            return status_of(&e);
        }
        let report = validate_ring(&ring);
        if !report.ok() {
            let v = &report.violations[0];
            set_error(&format!("validation failed: {} at {:?}", v.law, v.indices));
            return RinglabStatus::ValidationFailed;
        }
        *out = Box::into_raw(Box::new(RinglabRing { inner: ring, caps }));
        RinglabStatus::Ok
    })
}

/// Releases a ring handle. A null pointer is ignored.
///
/// # Safety
/// `ring` must have come from this library and not been freed already.
#[no_mangle]
pub unsafe extern "C" fn ringlab_ring_free(ring: *mut RinglabRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

unsafe fn deref<'a>(ring: *const RinglabRing) -> Result<&'a RinglabRing, RinglabStatus> {
    ring.as_ref().ok_or_else(|| {
        set_error("null ring handle");
        RinglabStatus::NullArgument
    })
}

/// Number of elements.
///
/// # Safety
/// `ring` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ringlab_ring_order(
    ring: *const RinglabRing,
    out: *mut u64,
) -> RinglabStatus {
    guard(|| {
        let r = match deref(ring) {
            Ok(r) => r,
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null output pointer");
            return RinglabStatus::NullArgument;
        }
        *out = r.inner.order();
        RinglabStatus::Ok
    })
}

/// Ring name as a fresh string.
///
/// # Safety
/// `ring` must be a live handle; `out` receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn ringlab_ring_name(
    ring: *const RinglabRing,
    out: *mut *mut c_char,
) -> RinglabStatus {
    guard(|| {
        let r = match deref(ring) {
            Ok(r) => r,
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null output pointer");
            return RinglabStatus::NullArgument;
        }
        give_string(r.inner.name().to_string(), out)
    })
}

/// Canonical RINGSPEC serialization.
///
/// # Safety
/// `ring` must be a live handle; `out` receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn ringlab_ring_serialize(
    ring: *const RinglabRing,
    out: *mut *mut c_char,
) -> RinglabStatus {
    guard(|| {
        let r = match deref(ring) {
            Ok(r) => r,
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null output pointer");
            return RinglabStatus::NullArgument;
        }
        give_string(serialize_ring(&r.inner), out)
    })
}

/// Jacobson radical as element-set text (`kind:` header plus one element per
/// line).
///
/// # Safety
/// `ring` must be a live handle; `out` receives an owned string.
#[no_mangle]
pub unsafe extern "C" fn ringlab_ring_radical(
    ring: *const RinglabRing,
    out: *mut *mut c_char,
) -> RinglabStatus {
    guard(|| {
        let r = match deref(ring) {
            Ok(r) => r,
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null output pointer");
            return RinglabStatus::NullArgument;
        }
        match ideals::jacobson_radical(&r.inner, &r.caps) {
            Ok(j) => give_string(j.to_text(), out),
            Err(e) => status_of(&e),
        }
    })
}

/// Evaluates a named predicate. `out_holds` receives 0 or 1; when the
/// predicate fails and `out_witness` is non-null it receives the witness
/// elements as text.
///
/// # Safety
/// `ring` must be a live handle, `name` NUL-terminated, `out_holds` valid;
/// `out_witness` may be null.
#[no_mangle]
pub unsafe extern "C" fn ringlab_ring_predicate(
    ring: *const RinglabRing,
    name: *const c_char,
    out_holds: *mut i32,
    out_witness: *mut *mut c_char,
) -> RinglabStatus {
    guard(|| {
        let r = match deref(ring) {
            Ok(r) => r,
            Err(s) => return s,
        };
        let name = match read_str(name) {
            Ok(n) => n,
            Err(s) => return s,
        };
        if out_holds.is_null() {
            set_error("null output pointer");
            return RinglabStatus::NullArgument;
        }
        let analysis = match Analysis::new(&r.inner, &r.caps) {
            Ok(a) => a,
            Err(e) => return status_of(&e),
        };
        match predicates::evaluate(&analysis, name) {
            Ok(res) => {
                *out_holds = res.holds as i32;
                if !out_witness.is_null() {
                    match res.witness_text() {
                        Some(w) => return give_string(w, out_witness),
                        None => *out_witness = ptr::null_mut(),
                    }
                }
                RinglabStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Builds an extension of the ring. `spec` is one of `matrix:N`, `tri:N`,
/// `scalarupper:N`, `powerseries:K` (identity twist), or `trivext`.
///
/// # Safety
/// `ring` must be a live handle, `spec` NUL-terminated, `out` valid; `*out`
/// must be released with [`ringlab_ring_free`].
#[no_mangle]
pub unsafe extern "C" fn ringlab_ring_construct(
    ring: *const RinglabRing,
    spec: *const c_char,
    out: *mut *mut RinglabRing,
) -> RinglabStatus {
    guard(|| {
        let r = match deref(ring) {
            Ok(r) => r,
            Err(s) => return s,
        };
        let spec = match read_str(spec) {
            Ok(s) => s,
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null output pointer");
            return RinglabStatus::NullArgument;
        }
        let (kind, arg) = match spec.split_once(':') {
            Some((k, a)) => (k, a.parse::<usize>().ok()),
            None => (spec, None),
        };
        let built = match (kind, arg) {
            ("matrix", Some(n)) if n >= 1 => construct::matrix_ring(&r.inner, n, &r.caps),
            ("tri", Some(n)) if n >= 1 => construct::upper_triangular_ring(&r.inner, n, &r.caps),
            ("scalarupper", Some(n)) if n >= 1 => {
                construct::scalar_plus_strict_upper(&r.inner, n, &r.caps)
            }
            ("powerseries", Some(k)) if k >= 1 => construct::truncated_skew_power_series(
                &r.inner,
                &construct::Endomorphism::identity(&r.inner),
                k,
                &r.caps,
            ),
            ("trivext", None) => construct::trivial_extension(&r.inner, &r.caps),
            _ => {
                set_error(&format!("unknown construction spec {spec:?}"));
                return RinglabStatus::UnknownName;
            }
        };
        match built {
            Ok(b) => {
                *out = Box::into_raw(Box::new(RinglabRing {
                    inner: b,
                    caps: r.caps,
                }));
                RinglabStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Replays catalogued checks over a corpus directory of `.ring` files and
/// returns the rendered report. `check_id` may name a single check or be
/// `"all"`. `out_failures` (optional) receives the number of FAIL rows.
///
/// # Safety
/// `corpus_dir` and `check_id` must be NUL-terminated strings; `out_report`
/// must be valid and receives an owned string; `out_failures` may be null.
#[no_mangle]
pub unsafe extern "C" fn ringlab_verify(
    corpus_dir: *const c_char,
    check_id: *const c_char,
    seed: u64,
    samples: u32,
    out_report: *mut *mut c_char,
    out_failures: *mut u64,
) -> RinglabStatus {
    guard(|| {
        let dir = match read_str(corpus_dir) {
            Ok(d) => d,
            Err(s) => return s,
        };
        let id = match read_str(check_id) {
            Ok(i) => i,
            Err(s) => return s,
        };
        if out_report.is_null() {
            set_error("null output pointer");
            return RinglabStatus::NullArgument;
        }
        let caps = Caps::from_env();
        let corpus = match ringlab::corpus::load_dir(std::path::Path::new(dir), &caps) {
            Ok(c) => c,
            Err(e) => return status_of(&e),
        };
        let config = ringlab::theorems::SuiteConfig {
            seed,
            samples,
            caps,
        };
        let report = if id == "all" {
            ringlab::theorems::run_suite(&corpus, &config)
        } else {
            ringlab::theorems::run_theorem(id, &corpus, &config).map(|check| {
                ringlab::theorems::TheoremReport {
                    digest: corpus.digest(),
                    config: config.clone(),
                    corpus_size: corpus.entries.len(),
                    checks: vec![check],
                    runtime: std::time::Duration::ZERO,
                }
            })
        };
        match report {
            Ok(report) => {
                if !out_failures.is_null() {
                    *out_failures = report.counts().1 as u64;
                }
                give_string(report.render(), out_report)
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a string produced by this library. A null pointer is ignored.
///
/// # Safety
/// `s` must have come from this library and not been freed already.
#[no_mangle]
pub unsafe extern "C" fn ringlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
