use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use renyi_qubit_core::*;

fn main() {
    let mut rng = ChaCha12Rng::seed_from_u64(17);
    for k in 0..4 {
        let a = rng.gen_range(0.0..5.0);
        let b = rng.gen_range(0.0..5.0);
        let t = random_unitary(&mut rng);
        if k != 3 {
            continue;
        }
        let alpha = EntropicIndex::new(a).unwrap();
        let beta = EntropicIndex::new(b).unwrap();
        let ovl = overlap_of(&t);
        let bound = tight_bound(alpha, beta, ovl);
        let f = factorize(&t);
        println!("a={a:.17} b={b:.17}");
        println!("gamma   = {:.17e}", ovl.gamma());
        println!("gamma_t = {:.17e}", f.gamma_t);
        println!("theta*  = {:.17e}", bound.theta_opt[0].radians());
        println!("gamma - theta* = {:.3e}", ovl.gamma() - bound.theta_opt[0].radians());
        let fam = minimizer_states(&t, &bound).unwrap();
        for m in &fam.states {
            let tp = t.apply(&m.state);
            let pa = m.state.probabilities();
            let pb = tp.probabilities();
            println!(
                "n={}: pa=({:.3e},{:.3e}) pb=({:.3e},{:.3e}) miss={:.3e}",
                m.n,
                pa.first(),
                pa.second(),
                pb.first(),
                pb.second(),
                entropy_sum_of_state(&m.state, &t, alpha, beta) - bound.value
            );
        }
        // what the bound value itself sees at theta* vs endpoint
        let g = ovl.gamma();
        let th = bound.theta_opt[0].radians();
        let o1 = objective(alpha, beta, Angle::new(g).unwrap(), Angle::new(th).unwrap()).unwrap();
        let o2 = objective(alpha, beta, Angle::new(g).unwrap(), Angle::new(g).unwrap()).unwrap();
        println!("objective(theta*)={:.17e}", o1);
        println!("objective(gamma) ={:.17e}", o2);
        println!("bound.value      ={:.17e}", bound.value);
    }
}
