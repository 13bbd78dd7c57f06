use std::ops::{Index, IndexMut};

use crate::graph::LocationId;

/// A value for every location of a model, indexed by [`LocationId`].
#[derive(Debug, Clone, PartialEq)]
pub struct LocationMap<V>(Vec<V>);

impl<V> LocationMap<V> {
    pub fn from_vec(values: Vec<V>) -> Self {
        LocationMap(values)
    }

    pub fn from_fn(len: usize, f: impl FnMut(usize) -> V) -> Self {
        LocationMap((0..len).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (LocationId, &V)> {
        self.0.iter().enumerate().map(|(i, v)| (LocationId(i), v))
    }

    pub fn values(&self) -> &[V] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<V> {
        self.0
    }

    pub fn map<U>(&self, f: impl FnMut(&V) -> U) -> LocationMap<U> {
        LocationMap(self.0.iter().map(f).collect())
    }
}

impl<V> Index<LocationId> for LocationMap<V> {
    type Output = V;

    fn index(&self, id: LocationId) -> &V {
        &self.0[id.0]
    }
}

impl<V> IndexMut<LocationId> for LocationMap<V> {
    fn index_mut(&mut self, id: LocationId) -> &mut V {
        &mut self.0[id.0]
    }
}

impl LocationMap<bool> {
    /// Locations whose value is `true`, in model order.
    pub fn true_set(&self) -> Vec<LocationId> {
        self.iter().filter(|(_, v)| **v).map(|(id, _)| id).collect()
    }
}
