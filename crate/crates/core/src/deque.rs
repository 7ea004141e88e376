//! A bounded double-ended priority queue backed by a min-max heap.
//!
//! Finding the minimum or maximum is *O*(1); insertion and removal of
//! either extremum are *O*(log *n*).

/// Min-max heap holding at most `capacity` items.
#[derive(Debug, Clone)]
pub struct PriorityDeque<T> {
    heap: Vec<T>,
    capacity: usize,
}

/// Even depths hold minima, odd depths maxima.
fn is_min_level(i: usize) -> bool {
    (usize::BITS - (i + 1).leading_zeros() - 1).is_multiple_of(2)
}

fn parent(i: usize) -> usize {
    (i - 1) / 2
}

impl<T: Ord> PriorityDeque<T> {
    pub fn with_capacity(capacity: usize) -> Self {
        PriorityDeque {
            heap: Vec::with_capacity(capacity),
            capacity,
        }
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.heap.len() >= self.capacity
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn peek_min(&self) -> Option<&T> {
        self.heap.first()
    }

    pub fn peek_max(&self) -> Option<&T> {
        self.max_index().map(|i| &self.heap[i])
    }

    fn max_index(&self) -> Option<usize> {
        match self.heap.len() {
            0 => None,
            1 => Some(0),
            2 => Some(1),
            _ => Some(if self.heap[1] >= self.heap[2] { 1 } else { 2 }),
        }
    }

    /// Inserts `item`, handing it back if the deque is full.
    pub fn push(&mut self, item: T) -> Result<(), T> {
        if self.is_full() {
            return Err(item);
        }
        self.heap.push(item);
        self.bubble_up(self.heap.len() - 1);
        Ok(())
    }

    pub fn pop_min(&mut self) -> Option<T> {
        self.remove_at(0)
    }

    pub fn pop_max(&mut self) -> Option<T> {
        let i = self.max_index()?;
        self.remove_at(i)
    }

    fn remove_at(&mut self, i: usize) -> Option<T> {
        if i >= self.heap.len() {
            return None;
        }
        let item = self.heap.swap_remove(i);
        if i < self.heap.len() {
            self.trickle_down(i);
        }
        Some(item)
    }

    fn bubble_up(&mut self, i: usize) {
        if i == 0 {
            return;
        }
        let p = parent(i);
        if is_min_level(i) {
            if self.heap[i] > self.heap[p] {
                self.heap.swap(i, p);
                self.bubble_up_by(p, |a, b| a > b);
            } else {
                self.bubble_up_by(i, |a, b| a < b);
            }
        } else if self.heap[i] < self.heap[p] {
            self.heap.swap(i, p);
            self.bubble_up_by(p, |a, b| a < b);
        } else {
            self.bubble_up_by(i, |a, b| a > b);
        }
    }

    /// Moves `i` up through its grandparents while `better(i, grandparent)`.
    fn bubble_up_by(&mut self, mut i: usize, better: impl Fn(&T, &T) -> bool) {
        while i > 2 {
            let g = parent(parent(i));
            if better(&self.heap[i], &self.heap[g]) {
                self.heap.swap(i, g);
                i = g;
            } else {
                break;
            }
        }
    }

    fn trickle_down(&mut self, i: usize) {
        if is_min_level(i) {
            self.trickle_down_by(i, |a, b| a < b);
        } else {
            self.trickle_down_by(i, |a, b| a > b);
        }
    }

    fn trickle_down_by(&mut self, mut i: usize, better: impl Fn(&T, &T) -> bool) {
        let len = self.heap.len();
        loop {
            let first_child = 2 * i + 1;
            if first_child >= len {
                return;
            }
            // best among children and grandchildren
            let mut m = first_child;
            let candidates = [
                first_child + 1,
                4 * i + 3,
                4 * i + 4,
                4 * i + 5,
                4 * i + 6,
            ];
            for c in candidates {
                if c < len && better(&self.heap[c], &self.heap[m]) {
                    m = c;
                }
            }
            if m > first_child + 1 {
                // grandchild
                if better(&self.heap[m], &self.heap[i]) {
                    self.heap.swap(m, i);
                    let p = parent(m);
                    if better(&self.heap[p], &self.heap[m]) {
                        self.heap.swap(m, p);
                    }
                    i = m;
                } else {
                    return;
                }
            } else {
                if better(&self.heap[m], &self.heap[i]) {
                    self.heap.swap(m, i);
                }
                return;
            }
        }
    }

    pub fn heap_bytes(&self) -> usize {
        self.heap.capacity() * std::mem::size_of::<T>()
    }
}
