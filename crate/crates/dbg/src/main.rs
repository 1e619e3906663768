fn main() {
    use vxd_core::ambient::AlgebraDescriptor;
    use vxd_core::expr::parse_expr;
    let a = AlgebraDescriptor::polynomial_ring(vec!["x", "y"]).unwrap();
    let f = parse_expr("x^2 - 1/3*y", &a).unwrap();
    println!("got: {f}");
    let u = parse_expr("x + y", &a).unwrap().as_poly().unwrap();
    let v = parse_expr("x - y", &a).unwrap().as_poly().unwrap();
    let fm = u.mul(&u).mul(&v);
    let gm = u.mul(&v).mul(&v);
    println!("gcd: {}", fm.gcd(&gm));
    println!("expect: {}", u.mul(&v).int_primitive().1);
}
