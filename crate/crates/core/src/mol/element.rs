//! Element symbols and the organic-subset valence table.

const SYMBOLS: [&str; 118] = [
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl",
    "Ar", "K", "Ca", "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As",
    "Se", "Br", "Kr", "Rb", "Sr", "Y", "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In",
    "Sn", "Sb", "Te", "I", "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb",
    "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl",
    "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U", "Np", "Pu", "Am", "Cm", "Bk",
    "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs", "Mt", "Ds", "Rg", "Cn", "Nh",
    "Fl", "Mc", "Lv", "Ts", "Og",
];

pub const HYDROGEN: u8 = 1;
pub const CARBON: u8 = 6;
pub const NITROGEN: u8 = 7;
pub const OXYGEN: u8 = 8;
pub const FLUORINE: u8 = 9;
pub const PHOSPHORUS: u8 = 15;
pub const SULFUR: u8 = 16;
pub const CHLORINE: u8 = 17;
pub const BROMINE: u8 = 35;
pub const IODINE: u8 = 53;

/// Atomic number for a symbol with conventional capitalisation (`"Cl"`).
pub fn atomic_number(symbol: &str) -> Option<u8> {
    SYMBOLS
        .iter()
        .position(|s| *s == symbol)
        .map(|i| (i + 1) as u8)
}

pub fn symbol(atomic_number: u8) -> &'static str {
    SYMBOLS[(atomic_number as usize).saturating_sub(1).min(SYMBOLS.len() - 1)]
}

/// Allowed valences for organic-subset elements, ascending.
pub fn default_valences(atomic_number: u8) -> Option<&'static [u8]> {
    Some(match atomic_number {
        5 => &[3],
        CARBON => &[4],
        NITROGEN => &[3],
        OXYGEN => &[2],
        PHOSPHORUS => &[3, 5],
        SULFUR => &[2, 4, 6],
        FLUORINE | CHLORINE | BROMINE | IODINE => &[1],
        _ => return None,
    })
}

/// Elements that may be written in lowercase aromatic form.
pub fn can_be_aromatic(atomic_number: u8) -> bool {
    matches!(atomic_number, 5 | 6 | 7 | 8 | 15 | 16 | 33 | 34 | 52)
}

pub fn is_halogen(atomic_number: u8) -> bool {
    matches!(atomic_number, FLUORINE | CHLORINE | BROMINE | IODINE)
}

/// Implicit hydrogen count for an organic-subset atom with the given sum of
/// bond orders (aromatic bonds counted as 1). `None` signals a valence
/// violation.
pub fn implicit_hydrogens(atomic_number: u8, aromatic: bool, bond_order_sum: u32) -> Option<u8> {
    let valences = default_valences(atomic_number)?;
    if aromatic {
        // One valence unit goes to the delocalised system.
        let lowest = valences[0] as u32;
        return Some(lowest.saturating_sub(bond_order_sum + 1) as u8);
    }
    valences
        .iter()
        .map(|&v| v as u32)
        .find(|&v| v >= bond_order_sum)
        .map(|v| (v - bond_order_sum) as u8)
}
