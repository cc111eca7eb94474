// The weighted snake graph of 13/3 as ASCII art, plus SVG and TikZ sizes.
// Pass r s to draw another one.
use qsnake::render::{render_ascii, render_svg, render_tikz};
use qsnake::snake::sign_sequence;
use qsnake::{snake_graph, ContinuedFraction};

pub fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (r, s) = match args[..] {
        [r, s] => (r, s),
        _ => (13, 3),
    };
    let cf = ContinuedFraction::expand(r, s).expect("coprime r >= s >= 1");
    let g = snake_graph(&cf);
    println!("{r}/{s} = {cf}, signs {}, {} boxes", sign_sequence(&cf), g.box_count());
    print!("{}", render_ascii(&g));
    println!("svg: {} bytes, tikz: {} lines", render_svg(&g).len(), render_tikz(&g).lines().count());
}
