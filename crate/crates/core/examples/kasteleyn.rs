// The Kasteleyn matrix of the snake of 13/3 and its determinant.
use qsnake::kasteleyn::{normalize_sign, verify_kasteleyn};

pub fn main() {
    let rep = verify_kasteleyn(13, 3).unwrap();
    for row in &rep.matrix.entries {
        let cells: Vec<String> = row.iter().map(|e| format!("{:>5}", e.to_string())).collect();
        println!("{}", cells.join(" "));
    }
    println!("bandwidth {}", rep.matrix.bandwidth());
    println!("det = {}", rep.det);
    println!("|det| = {} (sign {})", normalize_sign(&rep.det).1, rep.sign);
    println!("q^{} |det| = {}", rep.n, rep.abs_det.shift(rep.n));
    println!("pass: {}", rep.pass);
}
