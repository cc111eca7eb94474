// Arithmetic in Z[q, q^-1] with exact big-integer coefficients.
use qsnake::laurent::{lp, LaurentFraction};

pub fn main() {
    let a = lp("q^-1 + 2 + q");
    let b = lp("1 - q");
    println!("a = {a}, b = {b}");
    println!("a + b = {}", &a + &b);
    println!("a * b = {}", &a * &b);
    println!("(a * b) / b = {}", (&a * &b).div_exact(&b).unwrap());
    println!("mirror of 1 + 2q + q^3 at degree 3: {}", lp("1 + 2q + q^3").mirror(3));
    println!("(1 + q)^40 has middle coefficient {}", lp("1 + q").pow(40).coeff(20));
    let f = LaurentFraction::new(lp("1 - q^2"), lp("q - q^2")).unwrap();
    println!("(1 - q^2)/(q - q^2) = {f}");
    println!("json: {}", serde_json::to_string(&a).unwrap());
}
