//! C ABI over the core crate: opaque handles, integer error codes, and a
//! thread-local last-error message. Strings cross the boundary as
//! NUL-terminated UTF-8 owned by this library; free them with
//! `automata_string_free`.

#![allow(non_camel_case_types)]
// the per-function docs state the pointer contracts; null is always handled
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use automata::closure::ClosureKind;
use automata::error::AutomatonError;
use automata::json::{nfa_from_json, nfa_to_json};
use automata::nfa::word_to_string;
use automata::subset::{shortest_rejected, state_complexity, universal};
use automata::{reductions, witness, Dfa, Nfa};

/// Opaque automaton handle.
pub struct automata_nfa {
    inner: Nfa,
}

/// Error codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum automata_status {
    AUTOMATA_OK = 0,
    /// A pointer argument was null.
    AUTOMATA_ERR_NULL = 1,
    /// Malformed JSON or an invalid automaton description.
    AUTOMATA_ERR_PARSE = 2,
    /// An operation precondition was violated (wrong class, bad name, ...).
    AUTOMATA_ERR_PRECONDITION = 3,
    /// A search or enumeration budget was exceeded.
    AUTOMATA_ERR_BUDGET = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(e: &AutomatonError) -> automata_status {
    let msg = CString::new(e.to_string()).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = msg);
    match e {
        AutomatonError::Json(_) | AutomatonError::Malformed(_) => automata_status::AUTOMATA_ERR_PARSE,
        AutomatonError::BudgetExceeded { .. } => automata_status::AUTOMATA_ERR_BUDGET,
        _ => automata_status::AUTOMATA_ERR_PRECONDITION,
    }
}

fn null_error(what: &str) -> automata_status {
    let msg = CString::new(format!("null pointer: {what}")).unwrap();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = msg);
    automata_status::AUTOMATA_ERR_NULL
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).unwrap_or_default().into_raw()
}

/// Message describing the most recent error on this thread. Owned by the
/// library; valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn automata_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Frees a string returned by this library. A null pointer is a no-op.
#[no_mangle]
pub unsafe extern "C" fn automata_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Frees an automaton handle. A null pointer is a no-op.
#[no_mangle]
pub unsafe extern "C" fn automata_nfa_free(m: *mut automata_nfa) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

unsafe fn parse_utf8<'a>(ptr: *const c_char) -> Result<&'a str, automata_status> {
    if ptr.is_null() {
        return Err(null_error("string argument"));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        let msg = CString::new("string argument is not valid UTF-8").unwrap();
        LAST_ERROR.with(|slot| *slot.borrow_mut() = msg);
        automata_status::AUTOMATA_ERR_PARSE
    })
}

unsafe fn handle<'a>(m: *const automata_nfa) -> Result<&'a Nfa, automata_status> {
    m.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| null_error("automaton handle"))
}

fn emit(out: *mut *mut automata_nfa, m: Nfa) -> automata_status {
    unsafe {
        *out = Box::into_raw(Box::new(automata_nfa { inner: m }));
    }
    automata_status::AUTOMATA_OK
}

/// Parses an automaton from its JSON description into a fresh handle.
#[no_mangle]
pub unsafe extern "C" fn automata_nfa_from_json(
    text: *const c_char,
    out: *mut *mut automata_nfa,
) -> automata_status {
    if out.is_null() {
        return null_error("out parameter");
    }
    let text = match parse_utf8(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match nfa_from_json(text) {
        Ok(m) => emit(out, m),
        Err(e) => set_error(&e),
    }
}

/// Serializes an automaton to its JSON description.
#[no_mangle]
pub unsafe extern "C" fn automata_nfa_to_json(
    m: *const automata_nfa,
    out: *mut *mut c_char,
) -> automata_status {
    if out.is_null() {
        return null_error("out parameter");
    }
    match handle(m) {
        Ok(n) => {
            *out = to_c_string(nfa_to_json(n));
            automata_status::AUTOMATA_OK
        }
        Err(s) => s,
    }
}

/// Builds a member of a named witness family: "all-final", "asif", "asi",
/// "suff", "fact", "jiraskova", or "jiraskova-asf".
#[no_mangle]
pub unsafe extern "C" fn automata_witness(
    family: *const c_char,
    n: usize,
    out: *mut *mut automata_nfa,
) -> automata_status {
    if out.is_null() {
        return null_error("out parameter");
    }
    let family = match parse_utf8(family) {
        Ok(f) => f,
        Err(s) => return s,
    };
    let built = match family {
        "all-final" => witness::witness_all_final(n),
        "asif" => witness::witness_asif(n),
        "asi" => witness::witness_asi(n),
        "suff" => witness::witness_suff(n).map(|d| d.as_nfa()),
        "fact" => witness::witness_fact(n).map(|d| d.as_nfa()),
        "jiraskova" => witness::jiraskova_nfa(n),
        "jiraskova-asf" => witness::jiraskova_asf_modified(n),
        other => Err(AutomatonError::precondition(format!(
            "unknown family {other:?}"
        ))),
    };
    match built {
        Ok(m) => emit(out, m),
        Err(e) => set_error(&e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn automata_nfa_state_count(
    m: *const automata_nfa,
    out: *mut usize,
) -> automata_status {
    if out.is_null() {
        return null_error("out parameter");
    }
    match handle(m) {
        Ok(n) => {
            *out = n.state_count();
            automata_status::AUTOMATA_OK
        }
        Err(s) => s,
    }
}

/// Number of states of the minimal complete DFA for the automaton's language.
#[no_mangle]
pub unsafe extern "C" fn automata_state_complexity(
    m: *const automata_nfa,
    out: *mut usize,
) -> automata_status {
    if out.is_null() {
        return null_error("out parameter");
    }
    match handle(m) {
        Ok(n) => {
            *out = state_complexity(n);
            automata_status::AUTOMATA_OK
        }
        Err(s) => s,
    }
}

/// Whether the automaton accepts every word over its alphabet.
#[no_mangle]
pub unsafe extern "C" fn automata_universal(
    m: *const automata_nfa,
    out: *mut bool,
) -> automata_status {
    if out.is_null() {
        return null_error("out parameter");
    }
    match handle(m) {
        Ok(n) => {
            *out = universal(n);
            automata_status::AUTOMATA_OK
        }
        Err(s) => s,
    }
}

/// Shortest rejected word rendered with the automaton's symbol names, or a
/// null pointer when the automaton is universal.
#[no_mangle]
pub unsafe extern "C" fn automata_shortest_rejected(
    m: *const automata_nfa,
    out: *mut *mut c_char,
) -> automata_status {
    if out.is_null() {
        return null_error("out parameter");
    }
    match handle(m) {
        Ok(n) => {
            *out = match shortest_rejected(n) {
                Some(w) => to_c_string(word_to_string(n.alphabet(), &w)),
                None => ptr::null_mut(),
            };
            automata_status::AUTOMATA_OK
        }
        Err(s) => s,
    }
}

/// Applies a named reduction: "asf", "asif", "recode4to2", "asf3-asif2",
/// "augment-asf", or "augment-asif".
#[no_mangle]
pub unsafe extern "C" fn automata_reduce(
    name: *const c_char,
    m: *const automata_nfa,
    out: *mut *mut automata_nfa,
) -> automata_status {
    if out.is_null() {
        return null_error("out parameter");
    }
    let name = match parse_utf8(name) {
        Ok(f) => f,
        Err(s) => return s,
    };
    let n = match handle(m) {
        Ok(n) => n,
        Err(s) => return s,
    };
    let built = match name {
        "asf" => reductions::asf_reduction(n),
        "asif" => reductions::asif_reduction(n),
        "recode4to2" => reductions::recode_4_to_2(n),
        "asf3-asif2" => reductions::asf3_to_asif2(n),
        "augment-asf" => reductions::augment_hash_asf(n),
        "augment-asif" => reductions::augment_hash_asif(n),
        other => Err(AutomatonError::precondition(format!(
            "unknown reduction {other:?}"
        ))),
    };
    match built {
        Ok(r) => emit(out, r),
        Err(e) => set_error(&e),
    }
}

/// Tests closedness of the language of a complete DFA (given as a handle
/// whose automaton is deterministic). `kind` is "prefix", "suffix", or
/// "factor". On a violation, `*witness_out` receives the counterexample word
/// (else null).
#[no_mangle]
pub unsafe extern "C" fn automata_is_closed(
    m: *const automata_nfa,
    kind: *const c_char,
    out: *mut bool,
    witness_out: *mut *mut c_char,
) -> automata_status {
    if out.is_null() || witness_out.is_null() {
        return null_error("out parameter");
    }
    let kind = match parse_utf8(kind) {
        Ok(k) => k,
        Err(s) => return s,
    };
    let n = match handle(m) {
        Ok(n) => n,
        Err(s) => return s,
    };
    let result = ClosureKind::parse(kind)
        .and_then(|k| Dfa::from_nfa(n).and_then(|d| automata::closure::is_closed(&d, k)));
    match result {
        Ok(r) => {
            *out = r.closed;
            *witness_out = match r.witness {
                Some(w) => to_c_string(word_to_string(n.alphabet(), &w)),
                None => ptr::null_mut(),
            };
            automata_status::AUTOMATA_OK
        }
        Err(e) => set_error(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    unsafe fn build(family: &str, n: usize) -> *mut automata_nfa {
        let name = CString::new(family).unwrap();
        let mut h: *mut automata_nfa = ptr::null_mut();
        assert_eq!(
            automata_witness(name.as_ptr(), n, &mut h),
            automata_status::AUTOMATA_OK
        );
        h
    }

    #[test]
    fn round_trip_and_measures() {
        unsafe {
            let h = build("all-final", 3);
            let mut sc = 0usize;
            assert_eq!(
                automata_state_complexity(h, &mut sc),
                automata_status::AUTOMATA_OK
            );
            assert_eq!(sc, 8);

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(automata_nfa_to_json(h, &mut json), automata_status::AUTOMATA_OK);
            let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
            let mut h2: *mut automata_nfa = ptr::null_mut();
            let ctext = CString::new(text).unwrap();
            assert_eq!(
                automata_nfa_from_json(ctext.as_ptr(), &mut h2),
                automata_status::AUTOMATA_OK
            );
            let mut count = 0usize;
            automata_nfa_state_count(h2, &mut count);
            assert_eq!(count, 3);

            automata_string_free(json);
            automata_nfa_free(h);
            automata_nfa_free(h2);
        }
    }

    #[test]
    fn shortest_rejected_and_universal() {
        unsafe {
            let h = build("all-final", 3);
            let mut uni = true;
            automata_universal(h, &mut uni);
            assert!(!uni);
            let mut w: *mut c_char = ptr::null_mut();
            assert_eq!(
                automata_shortest_rejected(h, &mut w),
                automata_status::AUTOMATA_OK
            );
            assert_eq!(CStr::from_ptr(w).to_str().unwrap(), "00");
            automata_string_free(w);
            automata_nfa_free(h);
        }
    }

    #[test]
    fn errors_set_message() {
        unsafe {
            let name = CString::new("all-final").unwrap();
            let mut h: *mut automata_nfa = ptr::null_mut();
            let status = automata_witness(name.as_ptr(), 2, &mut h);
            assert_eq!(status, automata_status::AUTOMATA_ERR_PRECONDITION);
            let msg = CStr::from_ptr(automata_last_error()).to_str().unwrap();
            assert!(msg.contains("n = 2"));

            assert_eq!(
                automata_nfa_from_json(ptr::null(), &mut h),
                automata_status::AUTOMATA_ERR_NULL
            );
            let bad = CString::new("{not json").unwrap();
            assert_eq!(
                automata_nfa_from_json(bad.as_ptr(), &mut h),
                automata_status::AUTOMATA_ERR_PARSE
            );
        }
    }

    #[test]
    fn reduce_and_closedness() {
        unsafe {
            let h = build("suff", 3);
            let kind = CString::new("suffix").unwrap();
            let mut closed = true;
            let mut w: *mut c_char = ptr::null_mut();
            assert_eq!(
                automata_is_closed(h, kind.as_ptr(), &mut closed, &mut w),
                automata_status::AUTOMATA_OK
            );
            assert!(!closed);
            assert!(!w.is_null());
            automata_string_free(w);
            automata_nfa_free(h);

            let h = build("jiraskova", 2);
            let name = CString::new("asf").unwrap();
            let mut r: *mut automata_nfa = ptr::null_mut();
            assert_eq!(
                automata_reduce(name.as_ptr(), h, &mut r),
                automata_status::AUTOMATA_OK
            );
            let mut count = 0usize;
            automata_nfa_state_count(r, &mut count);
            assert_eq!(count, 2);
            automata_nfa_free(r);
            automata_nfa_free(h);
        }
    }
}
