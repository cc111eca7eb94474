// The denominator snake: S(q) is the mirror image of q^n' M_q of the snake
// of [a2, ..., ak].
use qsnake::matching::denominator_via_matchings;

pub fn main() {
    for (r, s) in [(5, 2), (13, 3), (13, 5), (29, 12), (7, 1)] {
        let rep = denominator_via_matchings(r, s).unwrap();
        println!(
            "{r}/{s}: candidate {}, S(q) = {}, {:?}",
            rep.candidate, rep.denominator, rep.relation
        );
    }
}
