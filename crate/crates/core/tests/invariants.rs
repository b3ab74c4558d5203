use binsum::exact::{int, ratio};
use binsum::sums::{a_symbolic, a_value, SumSpec, SumValue};
use binsum::verify::{verify_shift_law, verify_theorem2_decomposition};

#[test]
fn shift_law_over_each_modulus() {
    for m in 1..=8usize {
        let k = 2 * m as i64;
        let r = verify_shift_law(m, 30, -k..=k);
        assert!(r.passed, "m={m}: {:?}", r.failures);
    }
}

#[test]
fn even_modulus_sum_from_kernel_entries() {
    let r = verify_theorem2_decomposition(4, 20, -12..=12);
    assert!(r.passed, "{:?}", r.failures);
    assert_eq!(r.cases, 4 * 21 * 25);
}

#[test]
fn numeric_mode_matches_symbolic_evaluation() {
    for z0 in [int(-1), int(1), int(2), ratio(-3, 2)] {
        for n in 0..=20u64 {
            for m in 1..=6u64 {
                for k in -8..=8 {
                    let spec = SumSpec::numeric(n, m, k, z0.clone()).unwrap();
                    let expected = a_symbolic(n, m, k).eval(&z0).unwrap();
                    assert_eq!(a_value(&spec), SumValue::Numeric(expected));
                }
            }
        }
    }
}
