//! C ABI over `hopfkit`.
//!
//! Every function returns an `int32_t` status (`HK_OK` on success) and writes
//! results through out-pointers. Structures live behind the opaque
//! `HkStructure` handle; strings handed out must be released with
//! `hk_string_free`. The message of the last failure on the calling thread is
//! available from `hk_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hopfkit::algcore::radical;
use hopfkit::cocore::coradical;
use hopfkit::examples::{builtin, ExampleSpec};
use hopfkit::exactlin::Field;
use hopfkit::io::{self, FieldSpec, SplitReportFile, StructureFile, SubspaceFile};
use hopfkit::splitpipe::{run_split, SplitLevel, SplitSide};
use hopfkit::{with_field, Error};

pub const HK_OK: i32 = 0;
/// A mathematical negative: not separable, obstructed, an axiom fails.
pub const HK_NEGATIVE: i32 = 1;
/// Malformed input.
pub const HK_INPUT: i32 = 2;
pub const HK_NULL: i32 = 3;
pub const HK_UTF8: i32 = 4;
pub const HK_PANIC: i32 = 5;

pub const HK_SIDE_RADICAL: i32 = 0;
pub const HK_SIDE_CORADICAL: i32 = 1;
pub const HK_LEVEL_COMODULE: i32 = 0;
pub const HK_LEVEL_BICOMODULE: i32 = 1;

/// A parsed structure file.
pub struct HkStructure {
    file: StructureFile,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn code_of(e: &Error) -> i32 {
    if e.is_mathematical() {
        HK_NEGATIVE
    } else {
        HK_INPUT
    }
}

/// Runs `body`, turning errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), (i32, String)>) -> i32 {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HK_OK,
        Ok(Err((code, msg))) => {
            set_error(&msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            HK_PANIC
        }
    }
}

fn lib<T>(r: hopfkit::Result<T>) -> Result<T, (i32, String)> {
    r.map_err(|e| (code_of(&e), e.to_string()))
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, (i32, String)> {
    if p.is_null() {
        return Err((HK_NULL, "null string".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (HK_UTF8, "string is not UTF-8".into()))
}

unsafe fn handle<'a>(h: *const HkStructure) -> Result<&'a HkStructure, (i32, String)> {
    h.as_ref().ok_or((HK_NULL, "null handle".into()))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), (i32, String)> {
    if out.is_null() {
        return Err((HK_NULL, "null out-pointer".into()));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (i32, String)> {
    let c = CString::new(s).map_err(|_| (HK_INPUT, "string contains NUL".into()))?;
    put(out, c.into_raw())
}

/// Parses a structure file from JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_structure_from_json(json: *const c_char, out: *mut *mut HkStructure) -> i32 {
    guard(|| {
        let file: StructureFile = lib(io::from_json(text(json)?))?;
        put(out, Box::into_raw(Box::new(HkStructure { file })))
    })
}

/// Builds a built-in example. `spec_json` is e.g. `{"name":"taft","n":3,"lambda":"2"}`;
/// `field` is `"q"` or `"fN"`.
///
/// # Safety
/// Both strings must be NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_example(spec_json: *const c_char, field: *const c_char, out: *mut *mut HkStructure) -> i32 {
    guard(|| {
        let spec: ExampleSpec = lib(io::from_json(text(spec_json)?))?;
        let fs = match text(field)? {
            "q" | "Q" => FieldSpec::Q,
            s => FieldSpec::Fp {
                p: s.trim_start_matches(['f', 'F']).parse().map_err(|_| (HK_INPUT, format!("field {s:?}: expected q or fN")))?,
            },
        };
        let file = lib((|| Ok(with_field!(fs, |f| StructureFile::from_hopf(&builtin(&spec, &f)?))))())?;
        put(out, Box::into_raw(Box::new(HkStructure { file })))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hk_structure_free(h: *mut HkStructure) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread; valid until the next call.
#[no_mangle]
pub extern "C" fn hk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_structure_dim(h: *const HkStructure, out: *mut usize) -> i32 {
    guard(|| put(out, handle(h)?.file.dim))
}

/// Serializes the structure in the canonical file format.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_structure_to_json(h: *const HkStructure, out: *mut *mut c_char) -> i32 {
    guard(|| put_string(out, io::to_json(&handle(h)?.file)))
}

/// Checks the Hopf algebra axioms; `all_passed` receives 1 or 0.
///
/// # Safety
/// `h` must be a live handle and `all_passed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_validate_hopf(h: *const HkStructure, all_passed: *mut i32) -> i32 {
    guard(|| {
        let file = &handle(h)?.file;
        let ok = lib((|| Ok(with_field!(file.field, |f| hopf_ok(&f, file)?)))())?;
        put(all_passed, ok as i32)
    })
}

fn hopf_ok<F: Field>(f: &F, file: &StructureFile) -> hopfkit::Result<bool> {
    let b = file.bialgebra(f)?;
    let ok = b.is_valid();
    Ok(match file.antipode_matrix(f)? {
        Some(s) => ok && hopfkit::hopfcore::HopfObject::new(b, s).is_ok(),
        None => false,
    })
}

/// Dimension of the Jacobson radical.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_radical_dim(h: *const HkStructure, out: *mut usize) -> i32 {
    guard(|| {
        let file = &handle(h)?.file;
        let d = lib((|| Ok(with_field!(file.field, |f| radical(&file.algebra(&f)?, None)?.dim())))())?;
        put(out, d)
    })
}

/// Dimension of the coradical.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_coradical_dim(h: *const HkStructure, out: *mut usize) -> i32 {
    guard(|| {
        let file = &handle(h)?.file;
        let d = lib((|| Ok(with_field!(file.field, |f| coradical(&file.coalgebra(&f)?, None)?.dim())))())?;
        put(out, d)
    })
}

/// Splits along the radical or coradical given by `candidate_json` (a
/// subspace file) and writes the report as JSON. Only the bicomodule level
/// produces a report; the comodule level writes the maps and ledger.
///
/// # Safety
/// `h` must be a live handle, `candidate_json` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hk_split(h: *const HkStructure, side: i32, candidate_json: *const c_char, level: i32, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let file = &handle(h)?.file;
        let cand: SubspaceFile = lib(io::from_json(text(candidate_json)?))?;
        let side = match side {
            HK_SIDE_RADICAL => SplitSide::Radical,
            HK_SIDE_CORADICAL => SplitSide::Coradical,
            s => return Err((HK_INPUT, format!("unknown side {s}"))),
        };
        let level = match level {
            HK_LEVEL_COMODULE => SplitLevel::Comodule,
            HK_LEVEL_BICOMODULE => SplitLevel::Bicomodule,
            l => return Err((HK_INPUT, format!("unknown level {l}"))),
        };
        let json = lib((|| Ok(with_field!(file.field, |f| split_json(&f, file, &cand, side, level)?)))())?;
        put_string(out, json)
    })
}

fn split_json<F: Field>(f: &F, file: &StructureFile, cand: &SubspaceFile, side: SplitSide, level: SplitLevel) -> hopfkit::Result<String> {
    let a = file.bialgebra(f)?;
    let c = cand.subspace(f, a.dim())?;
    let (_, maps, rep) = run_split(&a, side, &c, level)?;
    Ok(match rep {
        Some(rep) => {
            rep.ledger.ensure("split")?;
            io::to_json(&SplitReportFile::new(&a.alg.labels, &rep))
        }
        None => {
            maps.report.ensure("split")?;
            io::to_json(&comodule_maps(&maps))
        }
    })
}

fn comodule_maps<F: Field>(maps: &hopfkit::splitpipe::SplitMaps<F>) -> ComoduleMaps {
    ComoduleMaps { ctx: maps.ctx, pi: maps.pi.format_rows(), sigma: maps.sigma.format_rows(), ledger: io::report_records(&maps.report) }
}

#[derive(serde::Serialize)]
struct ComoduleMaps {
    ctx: hopfkit::monocat::CtxKind,
    pi: Vec<Vec<String>>,
    sigma: Vec<Vec<String>>,
    ledger: Vec<io::CheckRecord>,
}

/// Runs a command-line invocation (`argv[0]` is the program name) and
/// captures its output. `exit_code` receives 0, 1 or 2.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; the out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hk_run_command(argv: *const *const c_char, argc: usize, output: *mut *mut c_char, exit_code: *mut i32) -> i32 {
    guard(|| {
        if argv.is_null() {
            return Err((HK_NULL, "null argv".into()));
        }
        let args = (0..argc).map(|i| text(*argv.add(i)).map(String::from)).collect::<Result<Vec<_>, _>>()?;
        let mut buf = Vec::new();
        let code = hopfkit::cli::run_command(&args, &mut buf);
        put(exit_code, code)?;
        put_string(output, String::from_utf8_lossy(&buf).into_owned())
    })
}
