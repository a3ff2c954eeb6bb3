use ascseq_ffi::*;
use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

fn new_seq(v: &[u32]) -> Result<*mut AscseqSequence, AscseqStatus> {
    let mut h = ptr::null_mut();
    let st = unsafe { ascseq_sequence_new(v.as_ptr(), v.len(), &mut h) };
    if st == AscseqStatus::Ok {
        Ok(h)
    } else {
        Err(st)
    }
}

fn entries(h: *const AscseqSequence) -> Vec<u32> {
    let mut len = 0;
    let st = unsafe { ascseq_sequence_entries(h, ptr::null_mut(), 0, &mut len) };
    let mut buf = vec![0u32; len];
    if len > 0 {
        assert_eq!(st, AscseqStatus::BufferTooSmall);
    }
    let st = unsafe { ascseq_sequence_entries(h, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!(st, AscseqStatus::Ok);
    buf
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ascseq_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn phi_round_trip() {
    let s = new_seq(&[0, 1, 0]).unwrap();
    assert_eq!(unsafe { ascseq_sequence_len(s) }, 3);
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { ascseq_phi(s, &mut t) }, AscseqStatus::Ok);
    assert_eq!(entries(t), vec![0, 0, 1]);
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { ascseq_phi_inv(t, &mut back) }, AscseqStatus::Ok);
    assert_eq!(entries(back), vec![0, 1, 0]);

    let mut a = AscseqStats::default();
    let mut b = AscseqStats::default();
    unsafe {
        assert_eq!(ascseq_sequence_stats(s, &mut a), AscseqStatus::Ok);
        assert_eq!(ascseq_sequence_stats(t, &mut b), AscseqStatus::Ok);
    }
    assert_eq!((a.max, a.ealm, a.rmin, a.rpos), (b.rmin, b.rpos, b.max, b.ealm));
    unsafe {
        ascseq_sequence_free(s);
        ascseq_sequence_free(t);
        ascseq_sequence_free(back);
    }
}

#[test]
fn rejects_bad_input() {
    assert_eq!(new_seq(&[0, 2]), Err(AscseqStatus::InvalidSequence));
    assert!(!last_error().is_empty());
    let st = unsafe { ascseq_sequence_new(ptr::null(), 3, ptr::null_mut()) };
    assert_eq!(st, AscseqStatus::NullPointer);
    let mut out = 0u64;
    assert_eq!(unsafe { ascseq_count(AscseqFamily::Ascent, 13, &mut out) }, AscseqStatus::OutOfRange);
    unsafe { ascseq_sequence_free(ptr::null_mut()) };
}

#[test]
fn empty_sequence() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { ascseq_sequence_new(ptr::null(), 0, &mut h) }, AscseqStatus::Ok);
    assert!(entries(h).is_empty());
    unsafe { ascseq_sequence_free(h) };
}

#[test]
fn counts() {
    let mut out = 0u64;
    for (fam, n, want) in [
        (AscseqFamily::Ascent, 7, 1014),
        (AscseqFamily::Inversion, 5, 120),
        (AscseqFamily::Matrix, 4, 15),
        (AscseqFamily::Permutation, 6, 217),
    ] {
        assert_eq!(unsafe { ascseq_count(fam, n, &mut out) }, AscseqStatus::Ok);
        assert_eq!(out, want);
    }
}

#[test]
fn verify_report() {
    let suite = CString::new("phi").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { ascseq_verify(suite.as_ptr(), 6, 0, 42, 5, false, &mut r) }, AscseqStatus::Ok);
    unsafe {
        assert!(ascseq_report_passed(r));
        assert!(ascseq_report_len(r) >= 1);
        assert!(ascseq_report_verdict(r, 0));
        assert!(!ascseq_report_verdict(r, 999));
        let js = ascseq_report_json(r);
        let text = CStr::from_ptr(js).to_str().unwrap().to_owned();
        ascseq_string_free(js);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["suite"], "phi");
        assert_eq!(v["verdict"], true);
        assert!(v["checks"][0]["anchor"].is_string());
        ascseq_report_free(r);
    }
    let bad = CString::new("nope").unwrap();
    assert_eq!(unsafe { ascseq_verify(bad.as_ptr(), 0, 0, 1, 5, false, &mut r) }, AscseqStatus::InvalidArgument);
    assert_eq!(unsafe { ascseq_verify(suite.as_ptr(), 10, 0, 1, 5, false, &mut r) }, AscseqStatus::OutOfRange);
}

#[test]
fn header_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/ascseq.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["ascseq_sequence_new", "ascseq_phi", "ascseq_verify", "ascseq_report_json", "ASCSEQ_STATUS_OK"] {
        assert!(text.contains(name), "{name} missing from the header");
    }
    let Ok(out) = Command::new("cc").arg("--version").output() else { return };
    if !out.status.success() {
        return;
    }
    let tmp = std::env::temp_dir().join(format!("ascseq_hdr_{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let src = tmp.join("use.c");
    std::fs::write(
        &src,
        "#include \"ascseq.h\"\n\
         int run(void) {\n\
           uint32_t v[3] = {0, 1, 0};\n\
           AscseqSequence *s = NULL, *t = NULL;\n\
           if (ascseq_sequence_new(v, 3, &s) != ASCSEQ_STATUS_OK) return 1;\n\
           if (ascseq_phi(s, &t) != ASCSEQ_STATUS_OK) return 2;\n\
           AscseqStats st;\n\
           ascseq_sequence_stats(t, &st);\n\
           ascseq_sequence_free(s);\n\
           ascseq_sequence_free(t);\n\
           return (int)st.asc;\n\
         }\n",
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-c"])
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&src)
        .arg("-o")
        .arg(tmp.join("use.o"))
        .status()
        .unwrap();
    assert!(status.success());
}
