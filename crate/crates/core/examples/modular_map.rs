// The q-deformation on all of Q ∪ {∞}, built from [x+1] = q[x] + 1 and
// [-1/x] = -1/(q[x]).
use num_rational::Rational64;
use qsnake::qrational::{q_map_general, ExtRational};

pub fn main() {
    for (n, d) in [(0, 1), (1, 1), (2, 1), (-1, 1), (-1, 2), (1, 2), (5, 2), (-7, 3)] {
        let x = Rational64::new(n, d);
        println!("[{x}]_q = {}", q_map_general(x));
    }
    println!("[inf]_q = {}/{}", q_map_general(ExtRational::Infinity).num(), 0);
}
