//! Compares the sequential and rayon-backed scan paths on the heaviest
//! real workloads: the full axiom suite, the canonical-element identity
//! suite, and the regular-module construction.

use criterion::{criterion_group, criterion_main, Criterion};
use dqha::algebra::check_dqha_axioms;
use dqha::builders::kw_z4_f13;
use dqha::canonical::check_pq_identities;
use dqha::exec::{scan_fail_seq, tuple_count};
use dqha::yd::{check_yd, h_as_yd};

fn raw_scan(c: &mut Criterion) {
    let h = kw_z4_f13().expect("pool algebra");
    let d = h.dim();
    let count = tuple_count(6, d);
    let probe = |flat: usize| {
        let mut t = [0usize; 6];
        let mut rest = flat;
        for slot in t.iter_mut().rev() {
            *slot = rest % d;
            rest /= d;
        }
        let lhs = h.sigma().value(&[t[0], t[1], t[2]]) * h.sigma().value(&[t[3], t[4], t[5]]);
        let rhs = h.sigma().value(&[t[3], t[4], t[5]]) * h.sigma().value(&[t[0], t[1], t[2]]);
        if lhs == rhs {
            None
        } else {
            Some(format!("mismatch at {t:?}"))
        }
    };
    c.bench_function("raw scan sequential", |b| {
        b.iter(|| scan_fail_seq(count, probe))
    });
    #[cfg(feature = "parallel")]
    c.bench_function("raw scan parallel", |b| {
        b.iter(|| dqha::exec::scan_fail_par(count, probe))
    });
}

fn checker_suites(c: &mut Criterion) {
    let h = kw_z4_f13().expect("pool algebra");
    c.bench_function("axiom suite kw_z4_f13", |b| {
        b.iter(|| check_dqha_axioms(&h))
    });
    c.bench_function("canonical identities kw_z4_f13", |b| {
        b.iter(|| check_pq_identities(&h).unwrap())
    });
    let m = h_as_yd(&h).expect("regular module");
    c.bench_function("regular module check_yd kw_z4_f13", |b| {
        b.iter(|| check_yd(&m))
    });
    c.bench_function("regular module construction kw_z4_f13", |b| {
        b.iter(|| h_as_yd(&h).unwrap())
    });
}

criterion_group!(benches, raw_scan, checker_suites);
criterion_main!(benches);
