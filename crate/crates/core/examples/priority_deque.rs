//! The bounded double-ended priority queue behind query selection.

use treequery::deque::PriorityDeque;

fn main() {
    let mut d = PriorityDeque::with_capacity(4);
    for x in [5, 1, 9, 3] {
        d.push(x).unwrap();
    }
    println!("full: {}, min {:?}, max {:?}", d.is_full(), d.peek_min(), d.peek_max());
    if let Err(x) = d.push(7) {
        println!("no room for {x}; dropping the minimum");
        d.pop_min();
        d.push(x).unwrap();
    }
    while let Some(x) = d.pop_max() {
        print!("{x} ");
    }
    println!();
}
