import sys


class BookProcessor:
    def __init__(self, bookInput):
        self.bookItems = bookInput

    def __len__(self):
        return len(self.bookItems)

    def computeBook(self):
        bookAcc = 0
        bookIdx = 0
        while bookIdx < len(self.bookItems):
            bookVal = self.bookItems[bookIdx]
            if bookVal != 33:
                bookAcc |= bookVal
            bookIdx += 1
        return bookAcc


if __name__ == "__main__":
    bookNums = list(map(int, sys.stdin.read().split()))
    bookObj = BookProcessor(bookNums)
    print(bookObj.computeBook())
