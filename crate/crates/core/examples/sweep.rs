// Every check on every coprime pair up to r = 30, on all cores.
use qsnake::verify::sweep;

pub fn main() {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    print!("{}", sweep(30, jobs));
}
