//! Rendering of the exponent-type tables and product tables.

use std::collections::BTreeMap;

use ordertype::catalog::{build_group_capped, Catalog, GroupDescriptor, Side};
use ordertype::factored::FactoredValue;
use ordertype::group::GroupError;
use ordertype::spectra::{spectrum_power_product, ExponentSpectrum};
use serde::Serialize;

use crate::output::csv_row;

/// The 16 divisors of 168, the column layout shared by all spectrum tables.
pub const TABLE_DIVISORS: [u64; 16] = [1, 2, 3, 4, 6, 7, 8, 12, 14, 21, 24, 28, 42, 56, 84, 168];

#[derive(Debug, Serialize)]
pub struct TableRow {
    pub i: usize,
    pub name: String,
    pub id: ordertype::GroupId,
    pub multiplicity: u64,
    pub exponent: u64,
    pub values: Vec<u64>,
}

#[derive(Debug, Serialize)]
pub struct SideTable {
    pub side: String,
    pub rows: Vec<TableRow>,
    /// Factored product `∏ eᵢ^{multᵢ}` per divisor of the joint exponent.
    pub products: Vec<(u64, FactoredValue)>,
}

fn spectrum_of(entry: &GroupDescriptor, cap: usize) -> Result<ExponentSpectrum, GroupError> {
    Ok(ExponentSpectrum::of_group(&build_group_capped(entry, cap)?))
}

/// Computes one side's table rows and product column from the catalog.
pub fn side_table(catalog: &Catalog, side: Side, cap: usize) -> Result<SideTable, GroupError> {
    let mut rows = Vec::new();
    let mut spectra = Vec::new();
    for (i, entry) in catalog.side(side).enumerate() {
        let spectrum = spectrum_of(entry, cap)?;
        rows.push(TableRow {
            i: i + 1,
            name: entry.name.clone(),
            id: entry.id,
            multiplicity: entry.multiplicity,
            exponent: spectrum.exponent(),
            values: TABLE_DIVISORS.iter().map(|&n| spectrum.eval(n)).collect(),
        });
        spectra.push((spectrum, entry.multiplicity));
    }
    let entries: Vec<(&ExponentSpectrum, u64)> = spectra.iter().map(|(e, k)| (e, *k)).collect();
    let products: Vec<(u64, FactoredValue)> = spectrum_power_product(&entries).into_iter().collect();
    Ok(SideTable {
        side: side.to_string(),
        rows,
        products,
    })
}

pub fn render_side_table_csv(table: &SideTable, out: &mut String) {
    out.push_str(&format!("# exponent types: side {}\n", table.side));
    let mut header = vec![
        "i".to_string(),
        "name".to_string(),
        "id".to_string(),
        "multiplicity".to_string(),
        "E".to_string(),
    ];
    header.extend(TABLE_DIVISORS.iter().map(u64::to_string));
    out.push_str(&csv_row(&header));
    out.push('\n');
    for row in &table.rows {
        let mut fields = vec![
            row.i.to_string(),
            row.name.clone(),
            row.id.to_string(),
            row.multiplicity.to_string(),
            row.exponent.to_string(),
        ];
        fields.extend(row.values.iter().map(u64::to_string));
        out.push_str(&csv_row(&fields));
        out.push('\n');
    }
    out.push_str(&format!("# exponent type products: side {}\n", table.side));
    out.push_str("n,value\n");
    for (n, value) in &table.products {
        out.push_str(&csv_row([n.to_string(), value.to_string()]));
        out.push('\n');
    }
}

/// Per-group spectrum data for the `spectrum` command.
#[derive(Debug, Serialize)]
pub struct SpectrumReport {
    pub id: ordertype::GroupId,
    pub name: String,
    pub order: u64,
    pub exponent: u64,
    pub order_spectrum: BTreeMap<u64, u64>,
    pub exponent_spectrum: BTreeMap<u64, u64>,
    pub revolved: Vec<(u64, FactoredValue)>,
    pub valuation: ordertype::ValuationVector,
}

pub fn spectrum_report(entry: &GroupDescriptor, cap: usize) -> Result<SpectrumReport, GroupError> {
    let group = build_group_capped(entry, cap)?;
    let orders = ordertype::OrderSpectrum::of_group(&group);
    let spectrum = ExponentSpectrum::from_order_spectrum(&orders);
    let revolved = ordertype::RevolvedSpectrum::from_exponent_spectrum(&spectrum);
    let valuation = ordertype::ValuationVector::from_revolved(&revolved);
    Ok(SpectrumReport {
        id: entry.id,
        name: entry.name.clone(),
        order: group.order(),
        exponent: spectrum.exponent(),
        order_spectrum: orders.counts().clone(),
        exponent_spectrum: spectrum.values().clone(),
        revolved: revolved.values().clone().into_iter().collect(),
        valuation,
    })
}

pub fn render_spectrum_csv(report: &SpectrumReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# group {} {} order {} exponent {}\n",
        report.id, report.name, report.order, report.exponent
    ));
    out.push_str("kind,n,p,value\n");
    for (n, count) in &report.order_spectrum {
        out.push_str(&csv_row(["o".into(), n.to_string(), String::new(), count.to_string()]));
        out.push('\n');
    }
    for (n, count) in &report.exponent_spectrum {
        out.push_str(&csv_row(["e".into(), n.to_string(), String::new(), count.to_string()]));
        out.push('\n');
    }
    for (n, value) in &report.revolved {
        out.push_str(&csv_row(["r".into(), n.to_string(), String::new(), value.to_string()]));
        out.push('\n');
    }
    for (&(n, p), &k) in report.valuation.entries() {
        out.push_str(&csv_row(["v".into(), n.to_string(), p.to_string(), k.to_string()]));
        out.push('\n');
    }
    out
}

