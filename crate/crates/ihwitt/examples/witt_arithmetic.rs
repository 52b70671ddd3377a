//! Witt groups of finite fields: classes, sums, orders and the restriction
//! to a quadratic extension.

use ihwitt::exactalg::{make_field, CoefficientSpec};
use ihwitt::witt::{diagonal_class, isotropic_vector, restriction_kernel, witt_elements, witt_group, BilinearForm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for c in ["Z2", "Z3", "Z5", "F9"] {
        let spec: CoefficientSpec = c.parse()?;
        let g = witt_group(&spec)?;
        let elements: Vec<String> = witt_elements(&spec)?.iter().map(ToString::to_string).collect();
        println!("W({c}) = {} : {}", g.structure, elements.join(", "));
    }

    let z3 = make_field(3, 1)?;
    let spec = CoefficientSpec::PrimeField(3);
    let one = diagonal_class(&z3, spec, &[1])?;
    let sum = one.add(&one)?;
    println!("<1> in W(Z3) has order {:?}; <1> + <1> = {sum}", one.order());
    let kernel: Vec<String> = restriction_kernel(3, 2)?.iter().map(ToString::to_string).collect();
    println!("kernel of W(Z3) -> W(F9): {}", kernel.join(", "));

    let f9 = make_field(3, 2)?;
    let identity = BilinearForm::new(f9.clone(), "F9".parse()?, vec![vec![1, 0], vec![0, 1]])?;
    println!("isotropic vector of I_2 over F9: {:?}", isotropic_vector(&identity)?);
    Ok(())
}
