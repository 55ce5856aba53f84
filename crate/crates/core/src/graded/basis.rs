use std::collections::HashMap;

use super::StructureError;
use crate::f2::F2Vec;

/// Finite list of named basis elements, each with an integer degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    names: Vec<String>,
    degrees: Vec<i32>,
    index: HashMap<String, usize>,
}

/// Degree profile of a vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(i32),
    Mixed,
}

impl GradedBasis {
    pub fn new<S: Into<String>>(elements: impl IntoIterator<Item = (S, i32)>) -> Result<Self, StructureError> {
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        let mut index = HashMap::new();
        for (name, degree) in elements {
            let name = name.into();
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(StructureError::DuplicateName(name));
            }
            names.push(name);
            degrees.push(degree);
        }
        Ok(Self { names, degrees, index })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn index_of(&self, name: &str) -> Result<usize, StructureError> {
        self.index.get(name).copied().ok_or_else(|| StructureError::UnknownName(name.to_string()))
    }

    pub fn homogeneity(&self, v: &F2Vec) -> Homogeneity {
        let mut deg = None;
        for i in v.ones() {
            match deg {
                None => deg = Some(self.degrees[i]),
                Some(d) if d != self.degrees[i] => return Homogeneity::Mixed,
                _ => {}
            }
        }
        deg.map_or(Homogeneity::Zero, Homogeneity::Degree)
    }

    /// True when `v` is zero or homogeneous of degree `deg`.
    pub fn is_of_degree(&self, v: &F2Vec, deg: i32) -> bool {
        matches!(self.homogeneity(v), Homogeneity::Zero) || self.homogeneity(v) == Homogeneity::Degree(deg)
    }

    pub fn indices_of_degree(&self, deg: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == deg).collect()
    }

    /// Human-readable sum of basis names, `0` for the zero vector.
    pub fn format(&self, v: &F2Vec) -> String {
        let parts: Vec<&str> = v.ones().map(|i| self.names[i].as_str()).collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    pub fn check_vector(&self, v: &F2Vec) -> Result<(), StructureError> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(StructureError::VectorLength { expected: self.dim(), found: v.len() })
        }
    }
}
