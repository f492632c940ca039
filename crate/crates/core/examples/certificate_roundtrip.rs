//! A certificate written to JSON, read back, and a tampered copy rejected.

use magic_crowns::certificate::{Certificate, CertificateDoc};
use magic_crowns::coverage::{CrownConstructor, Mode};

fn main() -> magic_crowns::Result<()> {
    let cert = CrownConstructor::for_crown(15, 1)?
        .labeling(82, Mode::Sem)?
        .expect("82 lies in the interval");
    let text = cert.to_json();
    println!("{} bytes of JSON, source: {}", text.len(), cert.source());

    let back = Certificate::from_json(&text)?;
    println!(
        "read back: {} valence {} ({})",
        back.family(),
        back.valence(),
        back.kind()
    );

    let mut doc: CertificateDoc = serde_json::from_str(&text).expect("valid json");
    doc.edges[0].label += 1;
    match doc.verify() {
        Err(e) => println!("tampered: {e}"),
        Ok(_) => println!("tampered copy accepted"),
    }
    Ok(())
}
