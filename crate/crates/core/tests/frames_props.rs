mod common;

use affine_frames::{
    bezout_degree_oracle, derivative, eamfm, validate_generic, Degree, Polynomial, Rational,
};
use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

#[test]
fn frame_contract_and_minimal_degree() {
    let mut rng = common::rng(401);
    for i in 0..60 {
        let n = 2 + i % 3;
        let c = common::generic_curve(&mut rng, n, 9);
        let g = validate_generic(&c).unwrap();
        let v = derivative(&g);
        let fr = eamfm(&g).unwrap();
        assert_eq!(fr.frame.column(0), v);
        assert_eq!(fr.frame.determinant().unwrap(), Polynomial::one());
        let dv = v.degree().finite().unwrap();
        assert_eq!(
            fr.frame.degree(),
            Degree::Finite(dv + bezout_degree_oracle(&v).unwrap()),
            "c = {c}"
        );
        assert_eq!(
            fr.section.inverse().act_vector(&v).unwrap(),
            fr.canonical_tangent
        );

        for t0 in [-2i64, 0, 1, 3] {
            let x = Rational::from_integer(BigInt::from(t0));
            let at = fr.frame.eval(&x);
            assert!(at.det().unwrap().is_one());
        }
    }
}

#[test]
fn frame_map_is_equi_affine_equivariant() {
    let mut rng = common::rng(402);
    for _ in 0..60 {
        let n = rng.gen_range(2..=4);
        let c = common::generic_curve(&mut rng, n, 7);
        let a = common::affine(&mut rng, n);
        let moved = a.act(&c).unwrap();
        let g_moved = validate_generic(&moved).expect("action preserves genericity");
        let lhs = eamfm(&g_moved).unwrap().frame;
        let rhs = a
            .linear_part()
            .act_matrix(&eamfm(&validate_generic(&c).unwrap()).unwrap().frame)
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}
