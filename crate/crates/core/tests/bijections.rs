use ascseq::bijections::*;
use ascseq::classify::*;
use ascseq::seq::*;
use std::collections::HashSet;

const N: usize = 8;

#[derive(Clone, Copy)]
struct St {
    asc: u32,
    rep: u32,
    zero: u32,
    max: u32,
    ealm: u32,
    rmin: u32,
    rpos: u32,
}

fn st(s: &[u32]) -> St {
    St {
        asc: asc_of(s),
        rep: rep_of(s),
        zero: zero_of(s),
        max: max_of(s),
        ealm: ealm_of(s),
        rmin: rmin_of(s),
        rpos: rpos_of(s),
    }
}

fn chi(b: bool) -> u32 {
    b as u32
}

/// 1-indexed position of the rpos-th minimum equals max+1.
fn prm_at_max(s: &[u32]) -> bool {
    let ss = set_stats(&AscentSequence::new(s.to_vec()).unwrap());
    ss.prm_positions[ss.rpos as usize] == max_of(s) as usize + 1
}

fn seqs(n: usize) -> Vec<Vec<u32>> {
    ascent_sequences(n).into_iter().map(|a| a.into_entries()).collect()
}

fn is_star(s: &[u32]) -> bool {
    !s.is_empty() && !AscentSequence::new(s.to_vec()).unwrap().is_staircase()
}

/// Image of the domain equals the codomain, the map is injective and the inverse undoes it.
fn check_bijection<F, G>(
    n_range: std::ops::RangeInclusive<usize>,
    dom: impl Fn(&[u32]) -> bool,
    codom_len: impl Fn(usize) -> usize,
    cod: impl Fn(&[u32]) -> bool,
    f: F,
    finv: G,
    transport: impl Fn(&[u32], &[u32]),
) where
    F: Fn(&[u32]) -> Result<Vec<u32>, MapError>,
    G: Fn(&[u32]) -> Result<Vec<u32>, MapError>,
{
    for n in n_range {
        let mut img = HashSet::new();
        for s in seqs(n).iter().filter(|s| dom(s)) {
            let t = f(s).unwrap_or_else(|e| panic!("{s:?}: {e}"));
            assert!(is_ascent_sequence(&t), "{s:?} -> {t:?}");
            assert!(cod(&t), "{s:?} -> {t:?} outside the codomain");
            assert_eq!(finv(&t).unwrap(), *s);
            transport(s, &t);
            assert!(img.insert(t), "not injective at {s:?}");
        }
        let cod_count = seqs(codom_len(n)).iter().filter(|t| cod(t)).count();
        assert_eq!(img.len(), cod_count, "image size at n={n}");
    }
}

#[test]
fn f2_example_and_lemma() {
    let s = [0, 0, 1, 2, 0, 1, 2, 1, 3, 3, 4];
    let (i, t) = f2(&s).unwrap();
    assert_eq!((i, t.clone()), (2, vec![0, 0, 1, 2, 0, 1, 2, 1, 3, 4]));
    assert_eq!(rpos_of(&t), 1);
    assert_eq!(f2_inv(2, &t).unwrap(), s.to_vec());
    for n in 2..=N {
        let mut img = HashSet::new();
        for s in seqs(n).iter().filter(|s| t_label(s) == TLabel::T2) {
            let (i, t) = f2(s).unwrap();
            let (a, b) = (st(s), st(&t));
            assert!(is_star(&t) && b.rpos <= i && i < b.rmin);
            assert_eq!((a.asc, a.max, a.ealm, a.rmin), (b.asc, b.max, b.ealm, b.rmin));
            assert_eq!(a.zero, b.zero + chi(a.rpos == 0));
            assert_eq!(a.rep, b.rep + 1);
            assert_eq!(f2_inv(i, &t).unwrap(), *s);
            img.insert((i, t));
        }
        let pairs: usize = seqs(n - 1)
            .iter()
            .filter(|t| is_star(t))
            .map(|t| (rmin_of(t) - rpos_of(t)) as usize)
            .sum();
        assert_eq!(img.len(), pairs);
    }
}

#[test]
fn phi1_lemma() {
    assert_eq!(phi1(&[0, 1]).unwrap(), vec![0]);
    assert_eq!(phi1(&[0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5, 7]).unwrap(), vec![0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5]);
    check_bijection(2..=N, |s| is_star(s) && in_p1(s), |n| n - 1, is_star, phi1, phi1_inv, |s, t| {
        let (a, b) = (st(s), st(t));
        assert_eq!(
            (a.asc, a.rep, a.zero, a.max, a.ealm, a.rmin, a.rpos),
            (b.asc + 1, b.rep, b.zero, b.max, b.ealm, b.rmin + 1, b.rpos)
        );
    });
}

#[test]
fn f3_lemma() {
    let s = [0, 0, 1, 2, 0, 1, 2, 1, 2, 4, 3, 5];
    assert_eq!(f3(&s).unwrap(), vec![0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5, 7]);
    check_bijection(
        2..=N,
        |s| t_label(s) == TLabel::T3,
        |n| n,
        |t| in_p1(t) && rpos_of(t) != 0,
        f3,
        f3_inv,
        |s, t| {
            let (a, b) = (st(s), st(t));
            assert_eq!((a.asc, a.rep, a.max, a.rmin, a.rpos), (b.asc, b.rep + 1, b.max, b.rmin - 1, b.rpos - 1));
            assert_eq!(a.zero, b.zero + chi(a.rpos == 0));
            assert_eq!(a.ealm + chi(prm_at_max(s)), b.ealm);
        },
    );
}

#[test]
fn f4_lemma() {
    let s = [0, 0, 1, 2, 0, 1, 2, 1, 4, 3, 5];
    assert_eq!(f4(&s).unwrap(), vec![0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5]);
    check_bijection(
        2..=N,
        |s| t_label(s) == TLabel::T4,
        |n| n,
        |t| is_star(t) && !in_p1(t) && rpos_of(t) != 0,
        f4,
        f4_inv,
        |s, t| {
            let (a, b) = (st(s), st(t));
            assert_eq!((a.asc, a.rep, a.max, a.rmin, a.rpos), (b.asc, b.rep, b.max, b.rmin - 1, b.rpos - 1));
            assert_eq!(a.zero, b.zero + chi(a.rpos == 0));
            assert_eq!(a.ealm + chi(prm_at_max(s)), b.ealm);
        },
    );
}

#[test]
fn f51_lemma() {
    check_bijection(
        2..=N,
        |s| t_label(s) == TLabel::T51,
        |n| n,
        in_f51_image,
        f51,
        f51_inv,
        |s, t| {
            let (a, b) = (st(s), st(t));
            assert_eq!((a.asc, a.rep, a.max, a.ealm, a.rmin, a.rpos), (b.asc, b.rep, b.max, b.ealm, b.rmin, b.rpos - 1));
            assert_eq!(a.zero, b.zero + chi(a.rpos == 0));
        },
    );
}

#[test]
fn f52_lemma() {
    check_bijection(
        2..=N,
        |s| t_label(s) == TLabel::T52,
        |n| n,
        in_f52_image,
        f52,
        f52_inv,
        |s, t| {
            let (a, b) = (st(s), st(t));
            assert_eq!((a.asc, a.rep, a.max, a.rmin, a.rpos), (b.asc, b.rep, b.max, b.rmin, b.rpos - 1));
            assert_eq!(a.zero, b.zero + chi(a.rpos == 0));
            assert_eq!(a.ealm + chi(prm_at_max(s)), b.ealm);
        },
    );
}

#[test]
fn rules_examples() {
    let s = [0, 1, 2, 0, 1, 4, 1, 2, 1, 1];
    let steps = substitute_r1_steps(&s, 1, 4).unwrap();
    assert_eq!(steps[0], vec![0, 1, 2, 0, 1, 4, 2, 4, 1, 1]);
    assert_eq!(substitute_r1(&s, 1, 4).unwrap(), vec![0, 1, 2, 0, 1, 4, 2, 4, 4, 1]);
    let s = [0, 1, 2, 0, 1, 4, 4, 1, 5, 2, 1, 3, 1];
    let steps = substitute_r2_steps(&s, 1, 4).unwrap();
    assert_eq!(steps[0], vec![0, 1, 2, 0, 1, 4, 4, 5, 4, 2, 1, 3, 1]);
    assert_eq!(substitute_r2(&s, 1, 4).unwrap(), vec![0, 1, 2, 0, 1, 4, 4, 5, 4, 2, 4, 3, 1]);
    assert_eq!(insert_r3(&[0, 1, 2, 1], 2).unwrap(), vec![0, 1, 2, 1, 2]);
}

/// Every applicable (s, i, m) in A_8: R1/R2 preserve (asc, rep, zero, rmin), and also max
/// once the leftmost m lies outside the initial run 0,1,..,max-1; R3 raises rmin by one and
/// R4 keeps it.
#[test]
fn rules_preserve_statistics() {
    let mut applied = [0usize; 4];
    for s in seqs(8) {
        let a = st(&s);
        let ss = set_stats(&AscentSequence::new(s.clone()).unwrap());
        let masc: HashSet<u32> = ss.masc_positions.iter().map(|&p| s[p - 1]).collect();
        for &m in &masc {
            let outside = s.iter().position(|&v| v == m).unwrap() >= a.max as usize;
            for i in 1..ss.rmin_values.len() {
                let after = &s[ss.prm_positions[i - 1]..];
                if after.iter().filter(|&&v| v == ss.rmin_values[i]).count() < 2 {
                    continue;
                }
                for (k, r) in [substitute_r1(&s, i, m), substitute_r2(&s, i, m)].into_iter().enumerate() {
                    if let Ok(t) = r {
                        if t != s {
                            let b = st(&t);
                            assert_eq!((a.asc, a.rep, a.zero, a.rmin), (b.asc, b.rep, b.zero, b.rmin));
                            if outside {
                                assert_eq!(a.max, b.max);
                            }
                            applied[k] += 1;
                        }
                    }
                }
            }
            if let Ok(t) = insert_r3(&s, m) {
                assert!(is_ascent_sequence(&t));
                assert_eq!(rmin_of(&t), a.rmin + 1);
                applied[2] += 1;
            }
            if let Ok(t) = insert_r4(&s, m) {
                assert!(is_ascent_sequence(&t));
                assert_eq!(rmin_of(&t), a.rmin);
                applied[3] += 1;
            }
        }
    }
    assert!(applied.iter().all(|&c| c > 0), "{applied:?}");
}

#[test]
fn g_lemma() {
    let s = [0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 1, 3, 8];
    assert_eq!(g(&s).unwrap(), vec![0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 2, 3]);
    check_bijection(
        2..=N,
        |s| t_label(s) == TLabel::T53,
        |n| n - 1,
        |t| rpos_of(t) != 0,
        g,
        g_inv,
        |s, t| {
            let (a, b) = (st(s), st(t));
            assert_eq!((a.asc, a.rep, a.max, a.rmin, a.rpos), (b.asc + 1, b.rep, b.max, b.rmin, b.rpos - 1));
            assert_eq!(a.zero, b.zero + chi(a.rpos == 0));
            assert_eq!(a.ealm + chi(prm_at_max(s)), b.ealm);
        },
    );
}

#[test]
fn g53_examples_and_lemma() {
    assert_eq!(g53(&[0, 1, 2, 0, 1, 2, 5, 2, 3, 3]).unwrap(), vec![0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3]);
    assert_eq!(g53(&[0, 1, 2, 0, 1, 2, 2]).unwrap(), vec![0, 1, 2, 0, 1, 2, 5, 2]);
    let s = [0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 1, 3, 8];
    assert_eq!(f53(&s).unwrap(), vec![0, 1, 2, 0, 1, 2, 3, 6, 5, 5, 8, 6, 3, 2, 3]);
    check_bijection(
        2..=N,
        |s| rpos_of(s) != 0,
        |n| n + 1,
        in_b1,
        g53,
        g53_inv,
        |s, t| {
            let (a, b) = (st(s), st(t));
            assert_eq!((a.asc, a.rep, a.zero, a.rmin, a.rpos), (b.asc - 1, b.rep, b.zero, b.rmin, b.rpos));
        },
    );
}

fn b_minus_b1(t: &[u32]) -> bool {
    let l = classify_slice(t);
    l.b && !l.b1
}

#[test]
fn f54_examples_and_lemma() {
    let sb = [0, 1, 2, 0, 1, 2, 5, 2, 3, 2, 3, 8, 8, 4];
    assert_eq!(f54(&sb).unwrap(), vec![0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3, 7, 7, 4]);
    let s = [0, 1, 2, 0, 1, 2, 1, 2, 6, 3, 6, 6, 4];
    assert_eq!(f54(&s).unwrap(), vec![0, 1, 2, 0, 1, 2, 5, 2, 5, 3, 5, 5, 4]);
    assert_eq!(f54_inv(&[0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3, 7, 7, 4]).unwrap(), sb.to_vec());
    check_bijection(2..=N, |s| t_label(s) == TLabel::T54, |n| n, b_minus_b1, f54, f54_inv, |_, _| {});
}

/// f5 on T5: (asc, rep, rmin, rpos) -> (asc, rep, rmin, rpos-1) plus the three-way (max, ealm) split.
#[test]
fn f5_proposition() {
    for n in 2..=N {
        let mut img = HashSet::new();
        for s in seqs(n) {
            let l = classify_slice(&s);
            let Some(m) = l.m_label else { continue };
            let t = f5(&s).unwrap();
            let (a, b) = (st(&s), st(&t));
            assert_eq!((a.asc, a.rep, a.rmin, a.rpos), (b.asc, b.rep, b.rmin, b.rpos - 1));
            assert_eq!(a.zero, b.zero + chi(a.rpos == 0));
            match m {
                MLabel::M51 => assert_eq!((a.max, a.ealm), (b.max, b.ealm)),
                MLabel::M52 => assert_eq!((a.max, a.ealm), (b.max, b.ealm - 1)),
                MLabel::M53 => assert_eq!((a.max, a.ealm), (b.max - 1, b.ealm - 1)),
            }
            assert!(matches!(
                t_label(&t),
                TLabel::T3 | TLabel::T4 | TLabel::T51 | TLabel::T52 | TLabel::T53 | TLabel::T54
            ));
            assert_eq!(f5_inv(&t).unwrap(), s);
            assert!(img.insert(t));
        }
        let cod = seqs(n)
            .iter()
            .filter(|t| {
                rpos_of(t) != 0
                    && matches!(
                        t_label(t),
                        TLabel::T3 | TLabel::T4 | TLabel::T51 | TLabel::T52 | TLabel::T53 | TLabel::T54
                    )
            })
            .count();
        assert_eq!(img.len(), cod);
    }
}

#[test]
fn h2_lemma() {
    for n in 2..=N {
        let mut img = HashSet::new();
        for s in seqs(n).iter().filter(|s| d_label(s) == DLabel::D2) {
            let (i, t) = h2(s).unwrap();
            let (a, b) = (st(s), st(&t));
            assert!(is_star(&t) && b.ealm <= i && i < b.max);
            assert_eq!((a.asc, a.rmin, a.rpos, a.max), (b.asc, b.rmin, b.rpos, b.max));
            assert_eq!(a.zero, b.zero + chi(a.ealm == 0));
            assert_eq!(a.rep, b.rep + 1);
            assert_eq!(h2_inv(i, &t).unwrap(), *s);
            img.insert((i, t));
        }
        let pairs: usize =
            seqs(n - 1).iter().filter(|t| is_star(t)).map(|t| (max_of(t) - ealm_of(t)) as usize).sum();
        assert_eq!(img.len(), pairs);
    }
}

#[test]
fn phi2_lemma() {
    check_bijection(2..=N, |s| is_star(s) && in_p2(s), |n| n - 1, is_star, phi2, phi2_inv, |s, t| {
        let (a, b) = (st(s), st(t));
        assert_eq!(
            (a.asc, a.rep, a.zero, a.max, a.ealm, a.rmin, a.rpos),
            (b.asc + 1, b.rep, b.zero, b.max + 1, b.ealm, b.rmin, b.rpos)
        );
    });
}

#[test]
fn h3_h4_lemmas() {
    for (label, want_p2, h, hinv) in [
        (DLabel::D3, true, h3 as fn(&[u32]) -> Result<Vec<u32>, MapError>, h3_inv as fn(&[u32]) -> _),
        (DLabel::D4, false, h4, h4_inv),
    ] {
        check_bijection(
            2..=N,
            |s| d_label(s) == label,
            |n| n,
            |t| is_star(t) && in_p2(t) == want_p2 && ealm_of(t) != 0,
            h,
            hinv,
            |s, t| {
                let (a, b) = (st(s), st(t));
                let rep_shift = chi(label == DLabel::D3);
                assert_eq!((a.asc, a.rep, a.rmin, a.max, a.ealm), (b.asc, b.rep + rep_shift, b.rmin, b.max - 1, b.ealm - 1));
                assert_eq!(a.zero, b.zero + chi(a.ealm == 0));
                assert_eq!(a.rpos, b.rpos - chi(prm_at_max(s)));
            },
        );
    }
}

#[test]
fn h5_lemma() {
    for n in 2..=N {
        let mut img = HashSet::new();
        for s in seqs(n).iter().filter(|s| d_label(s) == DLabel::D5) {
            let t = h5(s).unwrap();
            let (a, b) = (st(s), st(&t));
            assert_eq!((a.asc, a.rep, a.max, a.ealm), (b.asc, b.rep, b.max, b.ealm - 1));
            assert_eq!(a.zero, b.zero + chi(a.ealm == 0));
            match classify_slice(s).d5_label.unwrap() {
                D5Label::D51 => assert_eq!((a.rmin, a.rpos), (b.rmin, b.rpos)),
                D5Label::D52 => assert_eq!((a.rmin, a.rpos), (b.rmin, b.rpos - 1)),
                D5Label::D53 => assert_eq!((a.rmin, a.rpos), (b.rmin - 1, b.rpos - 1)),
            }
            assert_eq!(h5_inv(&t).unwrap(), *s);
            assert!(img.insert(t));
        }
        let cod = seqs(n)
            .iter()
            .filter(|t| matches!(d_label(t), DLabel::D3 | DLabel::D4 | DLabel::D5) && ealm_of(t) != 0)
            .count();
        assert_eq!(img.len(), cod);
    }
}

#[test]
fn phi_base_cases() {
    assert_eq!(phi(&[0, 1, 0]).unwrap(), vec![0, 0, 1]);
    assert_eq!(phi(&[0, 1, 2, 3, 4]).unwrap(), vec![0, 1, 2, 3, 4]);
    assert_eq!(phi(&[0, 1, 2, 3, 1]).unwrap(), vec![0, 1, 1, 2, 3]);
    assert!(phi(&[0, 2]).is_err());
}

/// The septuple (asc,rep,zero,max,ealm,rmin,rpos) of s is (asc,rep,zero,rmin,rpos,max,ealm) of Phi(s).
#[test]
fn phi_septuple_bijection() {
    for n in 0..=8 {
        let mut img = HashSet::new();
        for s in seqs(n) {
            let t = phi(&s).unwrap();
            let (a, b) = (st(&s), st(&t));
            assert_eq!(
                (a.asc, a.rep, a.zero, a.max, a.ealm, a.rmin, a.rpos),
                (b.asc, b.rep, b.zero, b.rmin, b.rpos, b.max, b.ealm),
                "{s:?} -> {t:?}"
            );
            assert_eq!(phi_inv(&t).unwrap(), s);
            assert!(img.insert(t));
        }
        assert_eq!(img.len() as u64, FISHBURN[n]);
    }
}
