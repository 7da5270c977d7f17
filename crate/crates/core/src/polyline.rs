//! Piecewise linear curves.

use crate::error::{Error, Result};
use crate::point::{BoundingBox, Point3};

/// An ordered vertex list, open or closed.
///
/// For a closed curve the wrap-around edge from the last vertex back to the
/// first is implied; the first vertex is never repeated at the end.
#[derive(Debug, Clone, PartialEq)]
pub struct PLCurve {
    vertices: Vec<Point3>,
    closed: bool,
}

impl PLCurve {
    pub fn open(vertices: Vec<Point3>) -> Result<Self> {
        Self::new(vertices, false)
    }

    pub fn closed(vertices: Vec<Point3>) -> Result<Self> {
        Self::new(vertices, true)
    }

    pub fn new(vertices: Vec<Point3>, closed: bool) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::TooFewPoints { required: 2, actual: vertices.len() });
        }
        for v in &vertices {
            v.check_finite()?;
        }
        if closed && vertices.first() == vertices.last() {
            return Err(Error::NotClosed { gap: 0.0 });
        }
        Ok(Self { vertices, closed })
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges, counting the implied closing edge.
    pub fn edge_count(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }

    /// Edge `j` as an endpoint pair; for closed curves edge `n` wraps to the
    /// first vertex.
    pub fn edge(&self, j: usize) -> (Point3, Point3) {
        let a = self.vertices[j];
        let b = self.vertices[(j + 1) % self.vertices.len()];
        (a, b)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point3, Point3)> + '_ {
        (0..self.edge_count()).map(move |j| self.edge(j))
    }

    pub fn bounding_box(&self) -> BoundingBox {
        BoundingBox::of(&self.vertices)
    }

    /// Reverses vertex order, preserving the closed flag.
    pub fn reversed(&self) -> PLCurve {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        PLCurve { vertices, closed: self.closed }
    }
}
