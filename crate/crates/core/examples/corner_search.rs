// Corner searches over a membership oracle and what they cost.

use cubelearn::corner_search::{find_max_corner, find_min_corner, SearchStrategy};
use cubelearn::oracles::{Counted, FnMembership};
use cubelearn::{Error, Point};

fn main() -> cubelearn::Result<()> {
    let m = 1 << 12;
    let square = FnMembership::new(2, move |v: &Point| v.coords().iter().all(|&x| (0..=m).contains(&x)));

    for strategy in SearchStrategy::all() {
        let phi = Counted::new(&square);
        let hi = find_max_corner(&Point::origin(2), &phi, strategy)?;
        let lo = find_min_corner(&hi, &phi, strategy)?;
        println!("{strategy:>16}: {lo} .. {hi} in {} membership queries", phi.count());
    }

    // Two overlapping boxes: the corner reached depends on the start.
    let cross = FnMembership::new(2, |v: &Point| {
        let (x, y) = (v[0], v[1]);
        ((0..=4).contains(&x) && (0..=1).contains(&y)) || ((0..=1).contains(&x) && (0..=4).contains(&y))
    });
    for start in [Point::from([0, 0]), Point::from([0, 3])] {
        println!("max corner from {start}: {}", find_max_corner(&start, &cross, SearchStrategy::Binary)?);
    }

    // Unbounded sets are reported rather than searched forever.
    let right = FnMembership::new(1, |v: &Point| v[0] >= 0);
    match find_max_corner(&Point::from([0]), &right, SearchStrategy::Binary) {
        Err(Error::Unbounded { axis }) => println!("x >= 0 is unbounded along axis {axis}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
