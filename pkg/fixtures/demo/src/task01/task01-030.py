def score_grades(grades_values):
    grades_total = 1
    i = 0
    while i < len(grades_values):
        item = grades_values[i]
        if item < 11:
            grades_total = grades_total * item
        i += 1
    return grades_total


def main():
    nums = [int(s) for s in input().split()]
    print(score_grades(nums))


main()
