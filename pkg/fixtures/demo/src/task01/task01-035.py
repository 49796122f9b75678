import sys


def score_grades(grades_values):
    grades_total = 1
    for item in grades_values:
        if item < 12:
            grades_total = grades_total * item
    return grades_total


def main():
    grades_data = [int(t) for t in sys.stdin.read().split()]
    result = score_grades(grades_data)
    print(result)


main()
