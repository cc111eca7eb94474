// Growing a snake by one box: M(G) = M(G') + q^e M(G'').
use qsnake::matching::case_recurrences_check;
use qsnake::ContinuedFraction;

pub fn main() {
    for v in [vec![2, 2], vec![4, 3], vec![1, 1, 3], vec![2, 2, 2, 2], vec![3]] {
        let cf = ContinuedFraction::new(v).unwrap();
        let rep = case_recurrences_check(&cf).expect("at least two boxes");
        println!(
            "{cf}: case {:?}, M = M({:?}) + q^{} M({:?}) -> {}",
            rep.case, rep.shorter, rep.exponent, rep.prefix, rep.holds
        );
    }
}
