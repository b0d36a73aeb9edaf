use num_bigint::BigInt;
use quintrin_core::algebra::rational::{int, rat};
use quintrin_core::curve::{curve_from_t, point_search, CurvePoint};
use quintrin_core::trinomial::EquivClass;

#[test]
fn height_200_search_over_t_six_fifths() {
    let c = curve_from_t(&rat(6, 5)).unwrap();
    let start = std::time::Instant::now();
    let r = point_search(&c, 200).unwrap();
    eprintln!("search took {:?}, {} points", start.elapsed(), r.points.len());
    let expected = [
        (vec![0, 1, 0, 0], EquivClass::Generic(rat(6, 5))),
        (vec![-168, 45, 95, 55], EquivClass::Pure(int(18))),
        (vec![36, -150, 120, 35], EquivClass::Pure(int(432))),
        (vec![-88, -70, -75, 60], EquivClass::Pure(int(324))),
        (vec![-24, 100, -80, 195], EquivClass::Pure(int(24))),
    ];
    for (coords, class) in expected {
        let p = CurvePoint::from_i64(&coords);
        assert!(r.points.contains(&p), "missing {coords:?}");
        assert_eq!(c.point_to_trinomial(&p).unwrap().class, class);
    }
    for p in &r.points {
        assert!(p.height() <= BigInt::from(200));
        assert!(c.satisfies_power_sum_conditions(p).unwrap());
    }
    assert!(r.degenerate.is_empty());
}
