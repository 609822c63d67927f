//! Browsing the metric catalog.

use privacy_metrics::registry::{self, Category};

fn main() -> privacy_metrics::Result<()> {
    let reg = registry::registry();
    for c in Category::ALL {
        let ids: Vec<&str> = reg
            .all()
            .filter(|d| d.category == c)
            .map(|d| d.id.as_str())
            .collect();
        println!("{c} ({}): {}", ids.len(), ids.join(", "));
    }

    let d = reg.lookup("t_closeness")?;
    println!(
        "\n{} ranges over {} and is private when {}",
        d.name, d.value_range, d.direction
    );
    for c in &d.caveats {
        println!("  caveat: {c}");
    }

    let missing: Vec<&str> = reg
        .all()
        .filter(|d| !d.implemented)
        .map(|d| d.id.as_str())
        .collect();
    println!("\ncatalogued but not computable: {}", missing.join(", "));
    Ok(())
}
