// Perfect matchings of the snake of 5/2 and the identity R(q) = q^n M_q(G).
use qsnake::matching::{enumerate_matchings, matching_stat, matching_stat_dp};
use qsnake::{q_rational, snake_graph, ContinuedFraction};

pub fn main() {
    let cf = ContinuedFraction::expand(5, 2).unwrap();
    let g = snake_graph(&cf);
    for m in enumerate_matchings(&g) {
        let edges: Vec<String> = m.edges.iter().map(|e| format!("{}{}", e.a, e.b)).collect();
        println!("q^{:<3} {}", m.weight_exp(&g), edges.join(" "));
    }
    let stat = matching_stat(&g);
    assert_eq!(stat, matching_stat_dp(&g));
    let n = cf.scalar_exponent();
    println!("M_q = {stat}");
    println!("q^{n} M_q = {}", stat.shift(n));
    println!("R(q)  = {}", q_rational(5, 2).unwrap().num());
}
