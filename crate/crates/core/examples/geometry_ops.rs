// Cubes, unions and the abstract grid.

use cubelearn::geometry::interval;
use cubelearn::{AbstractGrid, Bound, Cube, CubeUnion, Point};

fn main() -> cubelearn::Result<()> {
    let a = Cube::finite(&[0, 0], &[4, 4])?;
    let b = Cube::finite(&[2, 2], &[6, 6])?;
    println!("a ∩ b = {:?}", a.intersect(&b)?.map(|c| c.to_string()));

    // At most 2d disjoint pieces.
    let pieces = a.subtract(&b)?;
    println!("a \\ b in {} pieces:", pieces.len());
    for p in &pieces {
        println!("  {p}");
    }

    let h = CubeUnion::single(a.clone()).add(&b)?;
    println!("a ∪ b: {} disjoint cubes, volume {:?}", h.len(), h.volume());
    let h = h.symdiff(&Cube::unit(&Point::from([4, 4])))?;
    println!("(4,4) after symdiff: {}", h.contains(&Point::from([4, 4]))?);

    // Bounds may be infinite.
    let half = interval(Bound::Finite(3), Bound::PosInf)?;
    let clipped = half.intersect(&interval(Bound::NegInf, Bound::Finite(10))?)?;
    println!("[3,+inf] ∩ [-inf,10] = {}", clipped.unwrap());

    let json = r#"{"dim": 2, "cubes": [{"lo": [0,3], "hi": [5,10]}, {"lo": [8,"-inf"], "hi": ["+inf","+inf"]}]}"#;
    let target: CubeUnion = serde_json::from_str(json)?;
    println!("parsed: {target}");

    let grid = AbstractGrid::of(&target)?;
    println!("lower grid values on axis 0: {:?}", grid.lower(0));
    println!("{} is a grid lower point: {}", Point::from([8, 3]), grid.is_lower_point(&Point::from([8, 3])));
    Ok(())
}
