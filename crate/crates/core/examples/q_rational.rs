// [r/s]_q from the command line (default 29/12), by all four routes.
use num_rational::Rational64;
use qsnake::qrational::{q_cf_eval, q_continuant, q_map_general, q_matrix_eval};
use qsnake::ContinuedFraction;

pub fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (r, s) = match args[..] {
        [r, s] => (r, s),
        _ => (29, 12),
    };
    let cf = ContinuedFraction::expand(r, s).expect("coprime r >= s >= 1");
    println!("{r}/{s} = {cf}  (even form {}, odd form {})", cf.even_form(), cf.odd_form());
    let value = q_matrix_eval(&cf);
    println!("matrix route:      {value}");
    println!("continued fraction: {}", q_cf_eval(&cf));
    println!("continuant:         R = {}", q_continuant(&cf));
    println!("modular map:        {}", q_map_general(Rational64::new(r as i64, s as i64)));
    let (num1, den1) = value.to_fraction().eval_at_one();
    println!("at q = 1:           {num1}/{den1}");
}
