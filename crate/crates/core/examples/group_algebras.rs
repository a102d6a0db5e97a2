//! Group algebras and their duals are of type S; the trace of S^2 is the
//! group order reduced mod p.

use bifrob::bifrob::{contracted_integral_condition, trace_s2};
use bifrob::{fixtures, FieldSpec};

fn main() {
    for p in [0u64, 2, 3, 5] {
        let field = FieldSpec::from_characteristic(p).unwrap();
        for name in ["c2", "c3", "c4", "c2xc2", "s3", "dual-s3"] {
            let b = fixtures::by_name(name, field).unwrap().build().unwrap();
            let tr = trace_s2(&b);
            let (holds, _) = contracted_integral_condition(&b);
            println!(
                "{:<4} {name:<8} sbf={} S^2=id:{} tr(S^2)={} eps(t)phi(1)={} contracted={}",
                field.to_string(),
                b.is_sbf(),
                b.antipode().pow(2).is_identity(),
                tr.trace,
                tr.eps_t_phi_one,
                holds
            );
        }
    }
}
