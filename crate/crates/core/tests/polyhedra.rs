use std::collections::BTreeSet;

use periscope::constructions::{rhombic_dodecahedron, rhombic_triacontahedron, DODECAHEDRON_FACES};
use periscope::ClosenessCounts;

type P = [f64; 3];

fn dot(a: P, b: P) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Dodecahedron vertices in the library's documented order.
fn dodecahedron_vertices() -> Vec<P> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let sg = |bit: usize| if bit == 1 { -1.0 } else { 1.0 };
    let mut v = Vec::new();
    for i in 0..8 {
        v.push([sg(i >> 2 & 1), sg(i >> 1 & 1), sg(i & 1)]);
    }
    for i in 0..4 {
        v.push([0.0, sg(i >> 1 & 1) / phi, sg(i & 1) * phi]);
    }
    for i in 0..4 {
        v.push([sg(i >> 1 & 1) / phi, sg(i & 1) * phi, 0.0]);
    }
    for i in 0..4 {
        v.push([sg(i >> 1 & 1) * phi, 0.0, sg(i & 1) / phi]);
    }
    v
}

/// Vertex sets of the faces: for each face normal, the vertices maximizing the
/// dot product.
fn faces_from_normals(vertices: &[P], normals: &[P]) -> BTreeSet<BTreeSet<usize>> {
    normals
        .iter()
        .map(|&nrm| {
            let best = vertices.iter().map(|&p| dot(p, nrm)).fold(f64::MIN, f64::max);
            (0..vertices.len())
                .filter(|&i| (dot(vertices[i], nrm) - best).abs() < 1e-9)
                .collect()
        })
        .collect()
}

#[test]
fn dodecahedron_faces_match_geometry() {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut normals = Vec::new();
    for a in [1.0, -1.0] {
        for b in [1.0, -1.0] {
            normals.push([0.0, a * phi, b]);
            normals.push([b, 0.0, a * phi]);
            normals.push([a * phi, b, 0.0]);
        }
    }
    let vertices = dodecahedron_vertices();
    let geometric = faces_from_normals(&vertices, &normals);
    assert_eq!(geometric.len(), 12);
    assert!(geometric.iter().all(|f| f.len() == 5));
    let listed: BTreeSet<BTreeSet<usize>> = DODECAHEDRON_FACES.iter().map(|f| f.iter().copied().collect()).collect();
    assert_eq!(listed, geometric);

    // consecutive face vertices are dodecahedron edges of length 2/phi
    for face in DODECAHEDRON_FACES {
        for k in 0..5 {
            let (a, b) = (vertices[face[k]], vertices[face[(k + 1) % 5]]);
            let len = ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt();
            assert!((len - 2.0 / phi).abs() < 1e-9);
        }
    }
}

#[test]
fn rhombic_dodecahedron_matches_cube_geometry() {
    let corners: Vec<P> = (0..8)
        .map(|i| [(i & 1) as f64, (i >> 1 & 1) as f64, (i >> 2 & 1) as f64].map(|x| 2.0 * x - 1.0))
        .collect();
    let g = rhombic_dodecahedron();
    assert_eq!((g.order(), g.edge_count()), (14, 24));
    // face 8 + 2c + b is the face where coordinate c has bit value b
    for c in 0..3 {
        for b in 0..2 {
            let mut nrm = [0.0; 3];
            nrm[c] = if b == 1 { 1.0 } else { -1.0 };
            let on_face: BTreeSet<usize> = (0..8).filter(|&i| dot(corners[i], nrm) > 0.0).collect();
            let nbrs: BTreeSet<usize> = g.neighbors(8 + 2 * c + b).ones().collect();
            assert_eq!(nbrs, on_face);
        }
    }
    assert_eq!(g.degree_sequence(), [vec![4; 6], vec![3; 8]].concat());
}

#[test]
fn rhombic_triacontahedron_shape() {
    let g = rhombic_triacontahedron();
    assert_eq!((g.order(), g.edge_count()), (32, 60));
    assert_eq!(g.degree_sequence(), [vec![5; 12], vec![3; 20]].concat());
    let b = g.bipartition().unwrap();
    assert_eq!(b.sizes(), (20, 12));
    assert_eq!(g.diameter().unwrap(), 6);
}

#[test]
fn polyhedra_are_ultra_balanced_and_irregular() {
    for g in [rhombic_dodecahedron(), rhombic_triacontahedron()] {
        let cc = ClosenessCounts::new(&g).unwrap();
        assert!(cc.is_ultra_nt_balanced());
        assert_eq!(cc.nt_graph().unwrap(), 0);
        assert!(!g.is_regular());
    }
}
