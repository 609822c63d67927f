//! k-anonymity and its refinements on a small salary table.

use privacy_metrics::model::{Column, ColumnKind, DataTable};
use privacy_metrics::tabular::{
    alpha_k_anonymity, em_anonymity, k_anonymity, ke_anonymity, l_diversity, t_closeness,
    DiversityMode,
};

fn main() -> privacy_metrics::Result<()> {
    let columns = vec![
        Column::qi("zip"),
        Column::qi("age"),
        Column::sensitive("salary", ColumnKind::Numeric),
    ];
    let table = DataTable::from_str_rows(
        columns,
        &[
            &["476**", "2*", "30"],
            &["476**", "2*", "30"],
            &["476**", "2*", "30"],
            &["476**", "2*", "40"],
            &["4790*", ">=40", "40"],
            &["4790*", ">=40", "50"],
            &["4790*", ">=40", "50"],
            &["4790*", ">=40", "50"],
            &["476**", "3*", "30"],
            &["476**", "3*", "30"],
            &["476**", "3*", "30"],
            &["476**", "3*", "40"],
        ],
    )?;

    println!("k-anonymity:            {}", k_anonymity(&table)?);
    let ak = alpha_k_anonymity(&table, "50")?;
    println!("(alpha,k) for 50:       alpha = {}, k = {}", ak.alpha, ak.k);
    println!(
        "entropy l-diversity:    {:.4}",
        l_diversity(&table, DiversityMode::Entropy)?
    );
    println!(
        "recursive (4,l):        {}",
        l_diversity(&table, DiversityMode::Recursive { c: 4.0 })?
    );
    println!("t-closeness:            {}", t_closeness(&table)?);
    let ke = ke_anonymity(&table)?;
    println!("(k,e)-anonymity:        k = {}, e = {}", ke.k, ke.e);
    println!(
        "(5,m)-anonymity:        m = {:.4}",
        em_anonymity(&table, 5.0)?
    );
    Ok(())
}
