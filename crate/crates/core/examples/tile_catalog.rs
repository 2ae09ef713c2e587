//! The tile records: face censuses, volumes, compositions and the
//! inventories of the unit icosahedron and dodecahedron.

use icotile::catalog::{self, census_label, expand_to_fundamental, inventory, InventoryTarget};

fn main() {
    for r in catalog::catalog() {
        let parts: Vec<&str> = r.composition.iter().map(|k| k.tag()).collect();
        println!("{:<6} {:<46} V = {:<14} {}", r.kind.tag(), census_label(&r.faces), r.volume.to_string(), parts.join("+"));
    }
    for target in [InventoryTarget::Icosahedron, InventoryTarget::DodecahedronComposite, InventoryTarget::DodecahedronTauComposite] {
        let inv = inventory(target);
        let volume = catalog::total_volume(&inv.items);
        println!("{target:?}: {:?} volume {volume} ~ {:.9}", inv.items, volume.to_f64());
    }
    let expanded = expand_to_fundamental(&inventory(InventoryTarget::DodecahedronComposite).items);
    println!("3T1 + 4T2 + 4T4 expands to {expanded:?}");
}
