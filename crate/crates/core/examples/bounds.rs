//! Level bounds for PT and UL separation as exact integers.

use regsep::monoid::ul_kappa_bound;
use regsep::pt::{kappa_bound, kappa_bound_string};
use regsep::template::{detectability_kappa, ramsey_template_bound};

fn main() {
    for (k1, k2, m) in [(1, 1, 1), (2, 1, 1), (4, 4, 3)] {
        println!("PT bound for ({k1}, {k2}, |A|={m}): {}", kappa_bound(k1, k2, m));
    }
    println!("PT bound for (50, 50, |A|=10): {}", kappa_bound_string(50, 50, 10));
    for (m1, m2, m) in [(1, 1, 1), (2, 3, 2), (6, 6, 2)] {
        println!("UL bound for monoids of size {m1}, {m2} over {m} letters: {}", ul_kappa_bound(m1, m2, m));
    }
    println!("template length bound for p=1, |A|=2: {}", ramsey_template_bound(1, 2));
    println!("detectability level for p=1, ℓ=2, |A|=2: {}", detectability_kappa(1, 2, 2));
}
