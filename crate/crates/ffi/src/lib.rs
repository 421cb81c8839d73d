//! C ABI for `ocwords`.
//!
//! Words live behind the opaque [`OcwWord`] handle. Every fallible call
//! returns an [`OcwStatus`]; on failure a message is available from
//! [`ocw_last_error`] until the next failing call on the same thread.
//! Strings returned through `char **` are owned by the caller and must be
//! released with [`ocw_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ocwords::sturmian::{is_balanced, oc_closed_form, standard_prefix};
use ocwords::{
    compute_border_array, compute_oc_sequence, is_closed, period, reconstruct_with_borders,
    DirectiveSequence, Error, OcSequence, Word,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OcwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed word, oc-sequence or directive, or a word over too many
    /// symbols.
    InvalidInput = 3,
    /// The oc-sequence is empty, starts with 0, or no Sturmian word has it.
    NotSturmian = 4,
    OutOfRange = 5,
    BufferTooSmall = 6,
    /// A Rust panic was caught at the boundary.
    Internal = 7,
}

/// An immutable word.
pub struct OcwWord {
    word: Word,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> OcwStatus {
    match e {
        Error::NotSturmianOc(_) | Error::InvalidOcStart => OcwStatus::NotSturmian,
        Error::OutOfRange(_) | Error::LengthOverflow | Error::BoundsExceeded { .. } => {
            OcwStatus::OutOfRange
        }
        _ => OcwStatus::InvalidInput,
    }
}

struct Failure(OcwStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(OcwStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> OcwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OcwStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error (panic caught at the C boundary)");
            OcwStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(OcwStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn word_arg<'a>(w: *const OcwWord) -> Result<&'a Word, Failure> {
    w.as_ref().map(|h| &h.word).ok_or_else(|| null("word"))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

fn to_c_string(s: String) -> *mut c_char {
    // Words never contain NUL: the parser rejects control characters.
    CString::new(s).expect("no interior NUL").into_raw()
}

fn new_handle(word: Word) -> *mut OcwWord {
    Box::into_raw(Box::new(OcwWord { word }))
}

/// Parses a word (one symbol per character; `""` is the empty word).
///
/// # Safety
/// `text` must be NULL or a NUL-terminated string; `out` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ocw_word_new(text: *const c_char, out: *mut *mut OcwWord) -> OcwStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let w = Word::parse(str_arg(text, "text")?)?;
        *out = new_handle(w);
        Ok(())
    })
}

/// Releases a word. NULL is ignored.
///
/// # Safety
/// `word` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ocw_word_free(word: *mut OcwWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Number of symbols; 0 for NULL.
///
/// # Safety
/// `word` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ocw_word_len(word: *const OcwWord) -> usize {
    word.as_ref().map_or(0, |h| h.word.len())
}

/// The word as UTF-8 text.
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ocw_word_to_string(
    word: *const OcwWord,
    out: *mut *mut c_char,
) -> OcwStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = to_c_string(word_arg(word)?.to_string());
        Ok(())
    })
}

/// The oc-sequence as a string of `0` and `1`.
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ocw_word_oc(word: *const OcwWord, out: *mut *mut c_char) -> OcwStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = to_c_string(compute_oc_sequence(word_arg(word)?).to_string());
        Ok(())
    })
}

/// Writes the border array `B[1..n]` into `buf`. `*written` always
/// receives `n`; if `capacity < n` nothing is written and
/// `OCW_STATUS_BUFFER_TOO_SMALL` is returned, so a call with `buf = NULL`,
/// `capacity = 0` queries the size.
///
/// # Safety
/// `word` must be a live handle; `buf` must hold `capacity` elements;
/// `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ocw_word_border_array(
    word: *const OcwWord,
    buf: *mut usize,
    capacity: usize,
    written: *mut usize,
) -> OcwStatus {
    guard(|| {
        let written = out_arg(written, "written")?;
        let b = compute_border_array(word_arg(word)?);
        *written = b.len();
        if capacity < b.len() {
            return Err(Failure(
                OcwStatus::BufferTooSmall,
                format!(
                    "border array needs {} entries, capacity is {capacity}",
                    b.len()
                ),
            ));
        }
        if !b.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            std::slice::from_raw_parts_mut(buf, b.len()).copy_from_slice(b.entries());
        }
        Ok(())
    })
}

/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ocw_word_is_closed(word: *const OcwWord, out: *mut bool) -> OcwStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = is_closed(word_arg(word)?);
        Ok(())
    })
}

/// Smallest period; 1 for the empty word.
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ocw_word_period(word: *const OcwWord, out: *mut usize) -> OcwStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = period(word_arg(word)?);
        Ok(())
    })
}

/// Balance of a word over at most two symbols.
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ocw_word_is_balanced(word: *const OcwWord, out: *mut bool) -> OcwStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = is_balanced(word_arg(word)?)?;
        Ok(())
    })
}

/// The Sturmian word starting with `a` whose oc-sequence is `oc`. With
/// `validate` false the round-trip check is skipped.
///
/// # Safety
/// `oc` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ocw_reconstruct(
    oc: *const c_char,
    validate: bool,
    out: *mut *mut OcwWord,
) -> OcwStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let oc: OcSequence = str_arg(oc, "oc")?.parse()?;
        let (w, _) = reconstruct_with_borders(&oc, validate)?;
        *out = new_handle(w);
        Ok(())
    })
}

/// The length-`len` prefix of the standard word with directive digits
/// `directive` (e.g. `"2,2,1"`).
///
/// # Safety
/// `directive` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ocw_standard_prefix(
    directive: *const c_char,
    len: usize,
    out: *mut *mut OcwWord,
) -> OcwStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let d: DirectiveSequence = str_arg(directive, "directive")?.parse()?;
        *out = new_handle(standard_prefix(&d, len)?);
        Ok(())
    })
}

/// The first `len` bits of the oc-sequence of a standard word, from its
/// closed form.
///
/// # Safety
/// `directive` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ocw_oc_closed_form(
    directive: *const c_char,
    len: usize,
    out: *mut *mut c_char,
) -> OcwStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let d: DirectiveSequence = str_arg(directive, "directive")?.parse()?;
        *out = to_c_string(oc_closed_form(&d, len)?.to_string());
        Ok(())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ocw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread (empty if none). The pointer
/// stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn ocw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
