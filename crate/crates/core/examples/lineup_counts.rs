//! Prints the number of lineups for r = 1..=12 (N = r - 1, d = r) and the
//! time each count takes.

use std::time::Instant;

use bosonic_polytope::lineups::count_lineups;

fn main() {
    for r in 1..=12usize {
        let start = Instant::now();
        let n = count_lineups(r.saturating_sub(1).max(1), r as u32, r).unwrap();
        println!("r = {r:2}  lineups = {n:5}  ({:.2?})", start.elapsed());
    }
}
