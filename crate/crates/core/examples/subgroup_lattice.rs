//! Enumerates subgroups of H(3,3) and groups them into conjugacy classes.

use burnside_aug::group::{
    conjugacy_classes_of_subgroups, enumerate_subgroups, is_normal, GroupParams, ModularGroup,
};

fn main() {
    let group = ModularGroup::new(GroupParams::new(3, 3).unwrap());
    let subgroups = enumerate_subgroups(&group);
    let classes = conjugacy_classes_of_subgroups(&group, &subgroups);
    println!("{} subgroups, {} classes", subgroups.len(), classes.len());
    for (i, class) in classes.classes().iter().enumerate() {
        let rep = &class[0];
        let gens: Vec<String> = rep
            .generators(&group)
            .iter()
            .map(|g| g.to_string())
            .collect();
        println!(
            "class {i:2}: order {:3}, size {}, normal {:5}, generated by <{}>",
            rep.order(),
            class.len(),
            is_normal(&group, rep),
            gens.join(", ")
        );
    }
}
