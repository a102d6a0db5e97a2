//! Trace-form semisimplicity next to the integral criterion eps(t) != 0,
//! phi(1) != 0, over every registered fixture.

use bifrob::bifrob::semisimplicity_report;
use bifrob::{fixtures, FieldSpec};

fn main() {
    for fx in fixtures::all(FieldSpec::rationals()) {
        let b = fx.build().unwrap();
        let r = semisimplicity_report(&b);
        println!(
            "{:<14} eps(t)={:<4} phi(1)={:<4} semisimple={:<13} cosemisimple={}",
            fx.name(),
            r.eps_t.to_string(),
            r.phi_one.to_string(),
            r.semisimple.as_str(),
            r.cosemisimple.as_str()
        );
    }
    // no trace-form verdict in positive characteristic
    let b = fixtures::by_name("c3", FieldSpec::prime(3).unwrap()).unwrap().build().unwrap();
    println!("c3 over F_3: {}", semisimplicity_report(&b).semisimple.as_str());
}
