use std::collections::hash_map::Entry;
use std::hash::Hasher;

use rustc_hash::{FxHashMap, FxHasher};
use serde::Serialize;

use super::packed::{self, RightMultiplier};
use super::table::TransformTable;
use super::TableError;

pub const DEFAULT_MAX_ELEMENTS: usize = 1_000_000;

#[derive(Debug, Clone, Copy)]
pub struct EnumerateOptions {
    /// Stop after products of this length; `None` runs to closure.
    pub max_depth: Option<usize>,
    pub max_elements: usize,
    /// Also compute the sets of products of each exact length.
    pub track_spheres: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            max_depth: None,
            max_elements: DEFAULT_MAX_ELEMENTS,
            track_spheres: false,
        }
    }
}

/// Per-depth growth data of a finitely generated monoid of tables.
///
/// Index `d` refers to products of `d` generators; depth 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthLayers {
    pub level: u32,
    /// Elements whose shortest product has length exactly `d` (word growth).
    pub layer_sizes: Vec<usize>,
    /// Elements expressible with at most `d` factors (ball growth).
    pub cumulative: Vec<usize>,
    /// Elements expressible with exactly `d` factors (spherical growth).
    pub sphere_sizes: Option<Vec<usize>>,
    /// True if the enumeration reached the full monoid.
    pub closed: bool,
}

impl GrowthLayers {
    pub fn total(&self) -> usize {
        self.cumulative.last().copied().unwrap_or(0)
    }

    pub fn depth(&self) -> usize {
        self.layer_sizes.len() - 1
    }
}

/// Deduplicating store of packed tables, keyed by a hash of the packed bits
/// with a full comparison on collision.
struct Arena {
    level: u32,
    stride: usize,
    bits: Vec<u64>,
    index: FxHashMap<u64, u32>,
    collisions: FxHashMap<u64, Vec<u32>>,
}

impl Arena {
    fn new(level: u32) -> Self {
        Self {
            level,
            stride: packed::word_count(level),
            bits: Vec::new(),
            index: FxHashMap::default(),
            collisions: FxHashMap::default(),
        }
    }

    fn len(&self) -> usize {
        self.bits.len() / self.stride
    }

    fn get(&self, i: u32) -> &[u64] {
        let start = i as usize * self.stride;
        &self.bits[start..start + self.stride]
    }

    fn hash(bits: &[u64]) -> u64 {
        let mut h = FxHasher::default();
        for &w in bits {
            h.write_u64(w);
        }
        h.finish()
    }

    fn find(&self, bits: &[u64], hash: u64) -> Option<u32> {
        let &first = self.index.get(&hash)?;
        if self.get(first) == bits {
            return Some(first);
        }
        self.collisions
            .get(&hash)?
            .iter()
            .copied()
            .find(|&i| self.get(i) == bits)
    }

    /// Returns the element's index and whether it was newly inserted.
    fn insert(&mut self, bits: &[u64]) -> (u32, bool) {
        let hash = Self::hash(bits);
        if let Some(i) = self.find(bits, hash) {
            return (i, false);
        }
        let i = self.len() as u32;
        self.bits.extend_from_slice(bits);
        match self.index.entry(hash) {
            Entry::Occupied(_) => self.collisions.entry(hash).or_default().push(i),
            Entry::Vacant(slot) => {
                slot.insert(i);
            }
        }
        (i, true)
    }
}

/// The elements found by [`enumerate_monoid`] together with their growth data.
pub struct MonoidEnumeration {
    arena: Arena,
    pub layers: GrowthLayers,
}

impl MonoidEnumeration {
    pub fn len(&self) -> usize {
        self.arena.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arena.len() == 0
    }

    /// Elements are numbered in BFS order; element 0 is the identity.
    pub fn element(&self, i: usize) -> TransformTable {
        packed::unpack(self.arena.level, self.arena.get(i as u32))
    }

    pub fn contains(&self, t: &TransformTable) -> bool {
        if t.level() != self.arena.level {
            return false;
        }
        let mut bits = vec![0; self.arena.stride];
        packed::pack(t, &mut bits);
        self.arena.find(&bits, Arena::hash(&bits)).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = TransformTable> + '_ {
        (0..self.len()).map(|i| self.element(i))
    }
}

/// Breadth-first enumeration of the monoid generated by `gens`.
///
/// Depth `d` holds the products of `d` generators. Without sphere tracking
/// each depth expands only the newly found elements. With it, the full set of
/// length-`d` products is carried forward, since relations that change length
/// by an even amount put one element on several spheres.
pub fn enumerate_monoid(
    gens: &[TransformTable],
    opts: EnumerateOptions,
) -> Result<MonoidEnumeration, TableError> {
    let level = match gens.first() {
        Some(g) => g.level(),
        None => return Err(TableError::NoGenerators),
    };
    if let Some(g) = gens.iter().find(|g| g.level() != level) {
        return Err(TableError::LevelMismatch {
            left: level,
            right: g.level(),
        });
    }
    let multipliers: Vec<RightMultiplier> = gens.iter().map(RightMultiplier::new).collect();

    let mut arena = Arena::new(level);
    let mut scratch = vec![0u64; arena.stride];
    packed::pack(&TransformTable::identity(level)?, &mut scratch);
    arena.insert(&scratch);

    let mut layer_sizes = vec![1];
    let mut cumulative = vec![1];
    let mut spheres = opts.track_spheres.then(|| vec![1usize]);
    let mut sphere: Vec<u32> = vec![0];
    let mut sphere_mark: Vec<u32> = Vec::new();
    let mut layer = 0u32..1;
    let mut closed = false;

    let mut depth = 0;
    loop {
        if opts.max_depth.is_some_and(|max| depth >= max) {
            break;
        }
        depth += 1;
        let frontier: Vec<u32> = if opts.track_spheres {
            std::mem::take(&mut sphere)
        } else {
            layer.clone().collect()
        };
        let start = arena.len() as u32;
        sphere_mark.resize(arena.len(), 0);
        let stamp = depth as u32;
        let mut src = vec![0u64; arena.stride];
        for &e in &frontier {
            src.copy_from_slice(arena.get(e));
            for m in &multipliers {
                m.apply(&src, &mut scratch);
                let (i, fresh) = arena.insert(&scratch);
                if fresh && arena.len() > opts.max_elements {
                    return Err(TableError::Capacity {
                        elements: arena.len(),
                        cap: opts.max_elements,
                    });
                }
                if opts.track_spheres {
                    if i as usize >= sphere_mark.len() {
                        sphere_mark.resize(i as usize + 1, 0);
                    }
                    if sphere_mark[i as usize] != stamp {
                        sphere_mark[i as usize] = stamp;
                        sphere.push(i);
                    }
                }
            }
        }
        let end = arena.len() as u32;
        layer = start..end;
        let fresh = (end - start) as usize;
        layer_sizes.push(fresh);
        cumulative.push(end as usize);
        if let Some(s) = spheres.as_mut() {
            s.push(sphere.len());
        }
        if fresh == 0 {
            closed = true;
            // Spheres can keep changing after the ball stops growing.
            if !(opts.track_spheres && opts.max_depth.is_some()) {
                break;
            }
        }
    }

    Ok(MonoidEnumeration {
        arena,
        layers: GrowthLayers {
            level,
            layer_sizes,
            cumulative,
            sphere_sizes: spheres,
            closed,
        },
    })
}
