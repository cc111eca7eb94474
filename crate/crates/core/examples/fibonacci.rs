// q-deformed ratios of consecutive Fibonacci numbers and the band
// determinants that count matchings of vertical snakes.
use qsnake::kasteleyn::{fibonacci_kasteleyn, fibonacci_kasteleyn_rescaled};
use qsnake::qrational::{fibonacci, fibonacci_polys};
use qsnake::QRational;

pub fn main() {
    for n in 2..=8 {
        let (num, den) = fibonacci_polys(n);
        let value = QRational::from_parts(num.clone(), den);
        println!("[{}/{}]_q = {value}", fibonacci(n + 1), fibonacci(n));
        assert_eq!(fibonacci_kasteleyn_rescaled(n), num);
        println!("    band determinant: {}", fibonacci_kasteleyn(n));
    }
}
