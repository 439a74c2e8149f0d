use std::time::Instant;
use zpdlab_core::constructions::*;
use zpdlab_core::decision::*;
use zpdlab_core::poly::Polynomial;
use zpdlab_core::linalg::int;
use zpdlab_core::span::*;

fn check(name: &str, alg: &zpdlab_core::Algebra, prop: &str) {
    for seed in [0u64, 99] {
        let cfg = SamplerConfig::with_seed(seed);
        let t0 = Instant::now();
        let cert = match prop {
            "zpd" => decide_zpd(alg, &cfg),
            "zlpd" => decide_zlpd(alg, &cfg),
            _ => decide_two_sided_zpd(alg, &cfg),
        };
        println!(
            "{name} {prop} seed={seed}: {:?} ker {} span {} samples {} in {:?}",
            cert.verdict, cert.ker_dim, cert.span_dim, cert.span_report.samples_used, t0.elapsed()
        );
    }
}

fn main() {
    let t5 = upper_triangular_algebra(5).unwrap();
    check("T_5", &t5, "zpd");
    let t4 = upper_triangular_algebra(4).unwrap();
    check("T_4", &t4, "two");
    let m3 = matrix_algebra(3).unwrap();
    check("M_3", &m3, "zlpd");
    let f = Polynomial::from_coeffs(vec![int(-2), int(0), int(1)]);
    let m2b = matrix_over_commutative(2, &f).unwrap();
    check("M_2(Q[t]/(t^2-2))", &m2b, "zlpd");
    let sum = matrix_algebra(3).unwrap().direct_sum(&upper_triangular_algebra(3).unwrap());
    check("M_3+T_3", &sum, "zlpd");
    let t4z = upper_triangular_algebra(4).unwrap();
    check("T_4", &t4z, "zlpd");
}
