use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use serde::Serialize;

use crate::error::Result;

/// Orbits of a finite set under a list of generators.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport<T> {
    pub elements: Vec<T>,
    pub orbits: Vec<Vec<usize>>,
    pub generator_images: BTreeMap<String, Vec<usize>>,
}

/// `s_pq`, with a comma when an index has several digits.
pub fn generator_name(p: usize, q: usize) -> String {
    if p < 10 && q < 10 {
        format!("s_{p}{q}")
    } else {
        format!("s_{p},{q}")
    }
}

/// Closes `seeds` under the generators and splits the result into orbits.
/// Elements keep discovery order, so the output is deterministic.
pub fn orbits<T, F>(seeds: Vec<T>, generators: &[(usize, usize)], act: F) -> Result<OrbitReport<T>>
where
    T: Clone + Eq + Hash,
    F: Fn((usize, usize), &T) -> Result<T>,
{
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut elements: Vec<T> = Vec::new();
    for s in seeds {
        if !index.contains_key(&s) {
            index.insert(s.clone(), elements.len());
            elements.push(s);
        }
    }
    let mut images: Vec<Vec<usize>> = vec![Vec::new(); generators.len()];
    let mut cursor = 0;
    while cursor < elements.len() {
        for (g, &gen) in generators.iter().enumerate() {
            let img = act(gen, &elements[cursor])?;
            let id = match index.get(&img) {
                Some(&id) => id,
                None => {
                    let id = elements.len();
                    index.insert(img.clone(), id);
                    elements.push(img);
                    id
                }
            };
            images[g].push(id);
        }
        cursor += 1;
    }
    // union-find over generator edges
    let mut parent: Vec<usize> = (0..elements.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for img in &images {
        for (a, &b) in img.iter().enumerate() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..elements.len() {
        let root = find(&mut parent, x);
        groups.entry(root).or_default().push(x);
    }
    let generator_images = generators.iter().zip(images).map(|(&(p, q), img)| (generator_name(p, q), img)).collect();
    Ok(OrbitReport { elements, orbits: groups.into_values().collect(), generator_images })
}
