//! Exact arithmetic in Q(tau): products, conjugates, norms, powers, square
//! roots and the embedding into f64.

use icotile::GoldenRational;

fn main() {
    let tau = GoldenRational::tau();
    let sigma = GoldenRational::sigma();
    println!("tau^2 = {}", &tau * &tau);
    println!("tau * sigma = {}", &tau * &sigma);
    println!("(2tau+1)(6tau+4) = {}", GoldenRational::new(1, 2, 1) * GoldenRational::new(4, 6, 1));

    let x = GoldenRational::new(3, -2, 5);
    println!("x = {x}, conj = {}, norm = {:?}, 1/x = {}", x.conj(), x.norm(), x.inv().unwrap());

    for n in [-5, 0, 10, 30] {
        let p = GoldenRational::tau_pow(n);
        println!("tau^{n} = {p} ~ {:.6}", p.to_f64());
    }

    // sigma^40 is about 4e-9 although its coefficients are in the tens of millions
    let tiny = sigma.pow(40).unwrap();
    println!("sigma^40 = {tiny} ~ {:e}", tiny.to_f64());

    let square = GoldenRational::new(7, 3, 1);
    match square.sqrt_exact() {
        Some(r) => println!("sqrt({square}) = {r}"),
        None => println!("{square} has no square root in the field"),
    }
    let two = GoldenRational::from_int(2);
    println!("sqrt(2) exact? {}", two.sqrt_exact().is_some());
    println!("json: {}", serde_json::to_string(&GoldenRational::new(24, 42, 12)).unwrap());
}
